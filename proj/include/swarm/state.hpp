#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace swarm {

/// N x n block of per-agent vectors (positions, velocities, offsets),
/// stored agent-major: agent i occupies [i*dim, (i+1)*dim).
class AgentMatrix {
public:
    AgentMatrix() = default;
    AgentMatrix(std::size_t agents, std::size_t dim, double fill = 0.0)
        : agents_(agents), dim_(dim), data_(agents * dim, fill) {}
    AgentMatrix(std::size_t agents, std::size_t dim, std::vector<double> data);

    std::size_t agents() const noexcept { return agents_; }
    std::size_t dim() const noexcept { return dim_; }

    std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * dim_, dim_}; }
    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * dim_, dim_};
    }
    double& operator()(std::size_t i, std::size_t k) noexcept { return data_[i * dim_ + k]; }
    double operator()(std::size_t i, std::size_t k) const noexcept { return data_[i * dim_ + k]; }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    bool all_finite() const noexcept;

    /// Adds `shift` to every agent.
    AgentMatrix translated(std::span<const double> shift) const;

    friend bool operator==(const AgentMatrix&, const AgentMatrix&) = default;

private:
    std::size_t agents_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

struct SwarmState {
    AgentMatrix positions;
    double time = 0.0;

    std::size_t agents() const noexcept { return positions.agents(); }
    std::size_t dim() const noexcept { return positions.dim(); }
};

/// Mean position (x bar).
std::vector<double> swarm_center(const AgentMatrix& positions);

/// Number of agent pairs closer than `tol`.
std::size_t coincident_pairs(const AgentMatrix& positions, double tol = 1e-12);

}  // namespace swarm

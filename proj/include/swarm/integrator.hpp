#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "swarm/dynamics.hpp"

namespace swarm {

enum class Method { rk4, euler };

std::string_view method_name(Method m) noexcept;
/// "rk4" or "euler"; throws ConfigError otherwise.
Method parse_method(std::string_view name);

struct IntegrationConfig {
    double dt = 1e-3;
    double t_end = 30.0;
    std::size_t record_stride = 10;
    Method method = Method::rk4;

    /// Throws InvalidInputError unless dt > 0, t_end >= dt, stride >= 1.
    void validate() const;
    std::size_t steps() const;
};

// Any coordinate beyond this magnitude aborts integration.
inline constexpr double kDivergenceBound = 1e12;

/// Recorded samples plus derived per-sample series.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(std::size_t agents, std::size_t dim) : agents_(agents), dim_(dim) {}

    /// Appends a sample and its center / V / dispersion. Times must increase.
    void record(double time, const AgentMatrix& positions);

    std::size_t size() const noexcept { return times_.size(); }
    bool empty() const noexcept { return times_.empty(); }
    std::size_t agents() const noexcept { return agents_; }
    std::size_t dim() const noexcept { return dim_; }

    std::span<const double> times() const noexcept { return times_; }
    const AgentMatrix& positions(std::size_t k) const { return states_.at(k); }
    std::span<const double> center(std::size_t k) const { return centers_.at(k); }
    std::span<const double> lyapunov_values() const noexcept { return lyapunov_; }
    std::span<const double> dispersions() const noexcept { return dispersion_; }

    std::size_t coincidence_samples = 0;      // samples with a coincident pair
    std::uint64_t clamped_evaluations = 0;    // from KernelDiagnostics

private:
    std::size_t agents_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> times_;
    std::vector<AgentMatrix> states_;
    std::vector<std::vector<double>> centers_;
    std::vector<double> lyapunov_;
    std::vector<double> dispersion_;
};

/// Fixed-step integration from initial.time to initial.time + t_end,
/// recording every record_stride steps and the final step. Throws
/// DivergenceError on a non-finite or out-of-bound state.
Trajectory integrate(const SwarmState& initial, const CouplingMatrix& w,
                     const InteractionKernel& kernel, const IntegrationConfig& config,
                     Backend backend = simd::default_backend());

// Generic y' = F(y) on a flat state, used for convergence checks.
using OdeRhs = std::function<void(std::span<const double> y, std::span<double> dydt)>;

struct OdeProblem {
    OdeRhs rhs;
    std::vector<double> initial;
    double t_end = 1.0;
};

/// Integrates with `steps` fixed steps of size dt.
std::vector<double> solve_fixed(const OdeProblem& problem, Method method, double dt,
                                std::size_t steps);

struct OrderEstimate {
    double order = 0.0;
    std::vector<double> differences;  // |y(h_k) - y(h_{k+1})|
};

/// Self-convergence order from three step sizes with a common ratio
/// (Richardson-style). Throws InvalidInputError for other dt lists.
OrderEstimate convergence_order_check(const OdeProblem& problem, Method method,
                                      std::span<const double> dt_list);

}  // namespace swarm

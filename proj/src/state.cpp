#include "swarm/state.hpp"

#include <algorithm>
#include <cmath>

#include "swarm/errors.hpp"

namespace swarm {

AgentMatrix::AgentMatrix(std::size_t agents, std::size_t dim, std::vector<double> data)
    : agents_(agents), dim_(dim), data_(std::move(data)) {
    if (data_.size() != agents * dim) throw InvalidInputError("agent matrix size mismatch");
}

bool AgentMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

AgentMatrix AgentMatrix::translated(std::span<const double> shift) const {
    if (shift.size() != dim_) throw InvalidInputError("translation has wrong dimension");
    AgentMatrix out = *this;
    for (std::size_t i = 0; i < agents_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) out(i, k) += shift[k];
    return out;
}

std::vector<double> swarm_center(const AgentMatrix& positions) {
    std::vector<double> c(positions.dim(), 0.0);
    if (positions.agents() == 0) return c;
    for (std::size_t i = 0; i < positions.agents(); ++i)
        for (std::size_t k = 0; k < positions.dim(); ++k) c[k] += positions(i, k);
    const double inv = 1.0 / static_cast<double>(positions.agents());
    for (double& v : c) v *= inv;
    return c;
}

std::size_t coincident_pairs(const AgentMatrix& positions, double tol) {
    std::size_t count = 0;
    const double tol_sq = tol * tol;
    for (std::size_t i = 0; i < positions.agents(); ++i) {
        for (std::size_t j = i + 1; j < positions.agents(); ++j) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < positions.dim(); ++k) {
                const double d = positions(i, k) - positions(j, k);
                d2 += d * d;
            }
            if (d2 < tol_sq) ++count;
        }
    }
    return count;
}

}  // namespace swarm

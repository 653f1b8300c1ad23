#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "swarm/coupling.hpp"
#include "swarm/kernel.hpp"
#include "swarm/random.hpp"
#include "swarm/state.hpp"

namespace testing {

inline swarm::GaussianKernel standard_kernel() { return swarm::GaussianKernel(1.0, 20.0, 0.2); }

inline swarm::CouplingMatrix complete_unit(std::size_t n) {
    std::vector<double> w(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 0.0;
    return swarm::CouplingMatrix(n, std::move(w));
}

inline swarm::SwarmState random_state(swarm::Rng& rng, std::size_t n, std::size_t dim,
                                      double half_width) {
    swarm::AgentMatrix x(n, dim);
    for (double& v : x.data()) v = rng.uniform(-half_width, half_width);
    return {x, 0.0};
}

// Random balanced W with random size and density drawn from `rng`.
inline swarm::CouplingMatrix random_balanced(swarm::Rng& rng, std::size_t n_min,
                                             std::size_t n_max) {
    const std::size_t n = n_min + rng.below(n_max - n_min + 1);
    const double density = rng.uniform(0.2, 1.0);
    return swarm::generate_balanced(n, density, rng.uniform(0.5, 2.0), rng.next());
}

// sum_j w_ij f(x_i - x_j) straight from eval_kernel, in ascending j.
inline swarm::AgentMatrix naive_rhs(const swarm::SwarmState& s, const swarm::CouplingMatrix& w,
                                    const swarm::InteractionKernel& k) {
    const std::size_t n = s.agents();
    const std::size_t dim = s.dim();
    swarm::AgentMatrix v(n, dim);
    std::vector<double> y(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (w(i, j) == 0.0) continue;
            for (std::size_t d = 0; d < dim; ++d) y[d] = s.positions(i, d) - s.positions(j, d);
            const auto f = swarm::eval_kernel(k, y);
            for (std::size_t d = 0; d < dim; ++d) v(i, d) += w(i, j) * f[d];
        }
    }
    return v;
}

inline double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace testing

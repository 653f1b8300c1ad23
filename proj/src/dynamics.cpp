#include "swarm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swarm/errors.hpp"

namespace swarm {

namespace {

std::size_t round_up(std::size_t n, std::size_t m) { return (n + m - 1) / m * m; }

void check_state(const SwarmState& state, const CouplingMatrix& w) {
    if (state.agents() != w.size()) {
        throw InvalidInputError("state has " + std::to_string(state.agents()) +
                                " agents but W is " + std::to_string(w.size()) + "x" +
                                std::to_string(w.size()));
    }
    if (!state.positions.all_finite()) throw InvalidInputError("state has non-finite positions");
}

}  // namespace

ForceField::ForceField(const CouplingMatrix& w, InteractionKernel kernel, Backend backend)
    : n_(w.size()),
      stride_(round_up(w.size(), simd::kPadding)),
      kernel_(std::move(kernel)),
      backend_(backend == Backend::avx2 && !simd::avx2_available() ? Backend::scalar : backend),
      weights_(w.data().begin(), w.data().end()),
      padded_weights_(n_ * stride_, 0.0),
      scratch_(stride_, 0.0) {
    for (std::size_t i = 0; i < n_; ++i)
        std::copy_n(weights_.data() + i * n_, n_, padded_weights_.data() + i * stride_);
}

void ForceField::velocities(std::span<const double> positions, std::size_t dim,
                            std::span<double> out, KernelDiagnostics* diag) const {
    if (positions.size() != n_ * dim || out.size() != n_ * dim) {
        throw InvalidInputError("force field: expected " + std::to_string(n_) + " agents of dim " +
                                std::to_string(dim));
    }

    if (const auto* g = std::get_if<GaussianKernel>(&kernel_)) {
        coords_.assign(dim * stride_, 0.0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < dim; ++k) coords_[k * stride_ + i] = positions[i * dim + k];
        simd::GaussianBatch batch;
        batch.agents = n_;
        batch.stride = stride_;
        batch.dim = dim;
        batch.coords = coords_.data();
        batch.weights = padded_weights_.data();
        batch.a = g->a();
        batch.b = g->b();
        batch.c = g->c();
        batch.velocities = out.data();
        batch.scratch = scratch_.data();
        simd::gaussian_velocities(backend_, batch);
        return;
    }

    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const double wij = weights_[i * n_ + j];
            if (j == i || wij == 0.0) continue;
            double d2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = positions[i * dim + k] - positions[j * dim + k];
                d2 += d * d;
            }
            const double gain = radial_gain(kernel_, std::sqrt(d2), diag);
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = positions[i * dim + k] - positions[j * dim + k];
                out[i * dim + k] += wij * (-(d * gain));
            }
        }
    }
}

AgentMatrix ForceField::velocities(const AgentMatrix& positions, KernelDiagnostics* diag) const {
    AgentMatrix out(positions.agents(), positions.dim());
    velocities(positions.data(), positions.dim(), out.data(), diag);
    return out;
}

AgentMatrix rhs(const SwarmState& state, const CouplingMatrix& w, const InteractionKernel& kernel,
                Backend backend) {
    check_state(state, w);
    return ForceField(w, kernel, backend).velocities(state.positions);
}

std::vector<double> center_velocity_full(const SwarmState& state, const CouplingMatrix& w,
                                         const InteractionKernel& kernel, Backend backend) {
    return swarm_center(rhs(state, w, kernel, backend));
}

std::vector<double> center_velocity_repulsion(const SwarmState& state, const CouplingMatrix& w,
                                              const GaussianKernel& kernel) {
    check_state(state, w);
    const auto v = validate_coupling(w);
    if (!v.balanced) {
        throw PreconditionError("repulsion-only center velocity needs balanced W (residual " +
                                std::to_string(v.max_balance_residual) + ")");
    }
    const std::size_t n = state.agents();
    const std::size_t dim = state.dim();
    const auto& x = state.positions;
    std::vector<double> out(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double wij = w(i, j);
            if (wij == 0.0) continue;
            double d2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = x(i, k) - x(j, k);
                d2 += d * d;
            }
            const double beta = std::exp(-d2 / kernel.c());
            for (std::size_t k = 0; k < dim; ++k) out[k] += wij * beta * (x(i, k) - x(j, k));
        }
    }
    if (n > 0) {
        const double scale = kernel.b() / static_cast<double>(n);
        for (double& c : out) c *= scale;
    }
    return out;
}

CenterState center_state(const AgentMatrix& positions) {
    CenterState cs;
    cs.center = swarm_center(positions);
    cs.errors = AgentMatrix(positions.agents(), positions.dim());
    for (std::size_t i = 0; i < positions.agents(); ++i) {
        for (std::size_t k = 0; k < positions.dim(); ++k) {
            const double e = positions(i, k) - cs.center[k];
            cs.errors(i, k) = e;
            cs.dispersion += e * e;
        }
    }
    return cs;
}

LyapunovValue lyapunov(const SwarmState& state) {
    const double disp = center_state(state.positions).dispersion;
    return {0.5 * disp, disp};
}

double lyapunov_rate(const SwarmState& state, const CouplingMatrix& w,
                     const InteractionKernel& kernel, Backend backend) {
    const AgentMatrix vel = rhs(state, w, kernel, backend);
    const auto center_vel = swarm_center(vel);
    const auto cs = center_state(state.positions);
    double rate = 0.0;
    for (std::size_t i = 0; i < state.agents(); ++i)
        for (std::size_t k = 0; k < state.dim(); ++k)
            rate += cs.errors(i, k) * (vel(i, k) - center_vel[k]);
    return rate;
}

}  // namespace swarm

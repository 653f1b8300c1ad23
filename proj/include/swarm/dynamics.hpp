#pragma once

#include <span>
#include <vector>

#include "swarm/coupling.hpp"
#include "swarm/kernel.hpp"
#include "swarm/simd/pairwise.hpp"
#include "swarm/state.hpp"

namespace swarm {

using simd::Backend;

/// Right-hand side x_i' = sum_j w_ij f(x_i - x_j), prepared once for a fixed
/// (W, kernel) pair. Gaussian kernels run through the SIMD pairwise kernels;
/// general kernels use a scalar loop.
class ForceField {
public:
    ForceField(const CouplingMatrix& w, InteractionKernel kernel,
               Backend backend = simd::default_backend());

    std::size_t agents() const noexcept { return n_; }
    Backend backend() const noexcept { return backend_; }
    const InteractionKernel& kernel() const noexcept { return kernel_; }

    /// positions and out are agent-major N x dim. Throws InvalidInputError on
    /// a dimension mismatch.
    void velocities(std::span<const double> positions, std::size_t dim,
                    std::span<double> out, KernelDiagnostics* diag = nullptr) const;

    AgentMatrix velocities(const AgentMatrix& positions,
                           KernelDiagnostics* diag = nullptr) const;

private:
    std::size_t n_;
    std::size_t stride_;
    InteractionKernel kernel_;
    Backend backend_;
    std::vector<double> weights_;         // N x N, general path
    std::vector<double> padded_weights_;  // N x stride, Gaussian path
    mutable std::vector<double> coords_;  // dim x stride scratch
    mutable std::vector<double> scratch_;
};

AgentMatrix rhs(const SwarmState& state, const CouplingMatrix& w,
                const InteractionKernel& kernel, Backend backend = simd::default_backend());

/// (1/N) sum_i x_i'
std::vector<double> center_velocity_full(const SwarmState& state, const CouplingMatrix& w,
                                         const InteractionKernel& kernel,
                                         Backend backend = simd::default_backend());

/// (b/N) sum_ij w_ij (x_i - x_j) exp(-|x_i - x_j|^2 / c). Equal to the full
/// center velocity only for balanced W; throws PreconditionError otherwise.
std::vector<double> center_velocity_repulsion(const SwarmState& state, const CouplingMatrix& w,
                                              const GaussianKernel& kernel);

struct CenterState {
    std::vector<double> center;
    AgentMatrix errors;  // e_i = x_i - x bar
    double dispersion = 0.0;
};

CenterState center_state(const AgentMatrix& positions);

struct LyapunovValue {
    double value = 0.0;       // V = 1/2 sum |e_i|^2
    double dispersion = 0.0;  // sum |e_i|^2 = 2V
};

LyapunovValue lyapunov(const SwarmState& state);

/// V' = sum_i e_i^T (x_i' - x bar') along the flow.
double lyapunov_rate(const SwarmState& state, const CouplingMatrix& w,
                     const InteractionKernel& kernel, Backend backend = simd::default_backend());

}  // namespace swarm

#include <cmath>

#include "swarm/simd/pairwise.hpp"

namespace swarm::simd {

// Reference kernel. Each term is rounded exactly as w_ij * f(x_i - x_j) from
// eval_kernel, accumulated in ascending j.
void gaussian_velocities_scalar(const GaussianBatch& batch) {
    const std::size_t n = batch.agents;
    const std::size_t dim = batch.dim;
    const std::size_t stride = batch.stride;
    for (std::size_t i = 0; i < n; ++i) {
        double* v = batch.velocities + i * dim;
        for (std::size_t k = 0; k < dim; ++k) v[k] = 0.0;
        const double* w_row = batch.weights + i * stride;
        for (std::size_t j = 0; j < n; ++j) {
            const double w = w_row[j];
            if (w == 0.0) continue;
            double d2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = batch.coords[k * stride + i] - batch.coords[k * stride + j];
                d2 += d * d;
            }
            const double g = batch.a - batch.b * std::exp(-d2 / batch.c);
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = batch.coords[k * stride + i] - batch.coords[k * stride + j];
                v[k] += w * (-(d * g));
            }
        }
    }
}

}  // namespace swarm::simd

#pragma once

#include <cstddef>
#include <string_view>

// Inner loop of the Gaussian swarm right-hand side,
//   v_i = sum_j w_ij * (-(x_i - x_j)) * (a - b exp(-|x_i - x_j|^2 / c)),
// in a scalar reference form and vectorized variants picked at runtime.

namespace swarm::simd {

// Lane width the batch layout is padded to.
inline constexpr std::size_t kPadding = 4;

struct GaussianBatch {
    std::size_t agents = 0;
    std::size_t stride = 0;      // agents rounded up to kPadding
    std::size_t dim = 0;
    const double* coords = nullptr;   // dim x stride, coordinate-major, zero padded
    const double* weights = nullptr;  // agents x stride, zero padded
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double* velocities = nullptr;     // agents x dim, agent-major (written)
    double* scratch = nullptr;        // stride doubles
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b) noexcept;

void gaussian_velocities_scalar(const GaussianBatch& batch);

#if defined(SWARM_HAVE_AVX2_KERNEL)
void gaussian_velocities_avx2(const GaussianBatch& batch);
#endif

/// True when the AVX2 variant is compiled in and the CPU supports AVX2+FMA.
bool avx2_available() noexcept;

/// Best available backend, overridable with SWARM_FORCE_BACKEND=scalar|avx2.
/// Requesting an unavailable backend falls back to scalar.
Backend default_backend() noexcept;

/// Runs the given backend (scalar if it is unavailable).
void gaussian_velocities(Backend backend, const GaussianBatch& batch);

}  // namespace swarm::simd

#include <cstdlib>
#include <string_view>

#include "swarm/simd/pairwise.hpp"

namespace swarm::simd {

std::string_view backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::avx2: return "avx2";
        case Backend::scalar: break;
    }
    return "scalar";
}

bool avx2_available() noexcept {
#if defined(SWARM_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Backend default_backend() noexcept {
    if (const char* env = std::getenv("SWARM_FORCE_BACKEND")) {
        if (std::string_view(env) == "scalar") return Backend::scalar;
    }
    return avx2_available() ? Backend::avx2 : Backend::scalar;
}

void gaussian_velocities(Backend backend, const GaussianBatch& batch) {
#if defined(SWARM_HAVE_AVX2_KERNEL)
    if (backend == Backend::avx2 && avx2_available()) {
        gaussian_velocities_avx2(batch);
        return;
    }
#endif
    (void)backend;
    gaussian_velocities_scalar(batch);
}

}  // namespace swarm::simd

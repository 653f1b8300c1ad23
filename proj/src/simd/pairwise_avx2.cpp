#include <immintrin.h>

#include "swarm/simd/pairwise.hpp"

namespace swarm::simd {

namespace {

// exp(x) for four doubles: Cephes range reduction x = n ln2 + r with a
// (2,3) Pade approximant on r. Relative error ~2e-16. Arguments below
// -708.39 flush to 0.
inline __m256d exp_pd(__m256d x) {
    const __m256d lo = _mm256_set1_pd(-708.3964185322641);
    const __m256d hi = _mm256_set1_pd(709.437);
    const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

    const __m256d fx = _mm256_round_pd(
        _mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634073599)),
        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    x = _mm256_fnmadd_pd(fx, _mm256_set1_pd(6.93145751953125e-1), x);
    x = _mm256_fnmadd_pd(fx, _mm256_set1_pd(1.42860682030941723212e-6), x);

    const __m256d xx = _mm256_mul_pd(x, x);
    __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, x);
    __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.00000000000000000009e0));

    __m256d r = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    r = _mm256_fmadd_pd(r, _mm256_set1_pd(2.0), _mm256_set1_pd(1.0));

    // 2^n via the exponent field.
    const __m128i n32 = _mm256_cvtpd_epi32(fx);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    n64 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
    const __m256d pow2 = _mm256_castsi256_pd(_mm256_slli_epi64(n64, 52));

    r = _mm256_mul_pd(r, pow2);
    return _mm256_andnot_pd(underflow, r);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void gaussian_velocities_avx2(const GaussianBatch& batch) {
    const std::size_t n = batch.agents;
    const std::size_t dim = batch.dim;
    const std::size_t stride = batch.stride;
    const __m256d a = _mm256_set1_pd(batch.a);
    const __m256d b = _mm256_set1_pd(batch.b);
    const __m256d neg_inv_c = _mm256_set1_pd(-1.0 / batch.c);
    double* gain = batch.scratch;

    for (std::size_t i = 0; i < n; ++i) {
        const double* w_row = batch.weights + i * stride;

        // Pass 1: w_ij * (a - b exp(-d2/c)) for every j.
        for (std::size_t j = 0; j < stride; j += kPadding) {
            __m256d d2 = _mm256_setzero_pd();
            for (std::size_t k = 0; k < dim; ++k) {
                const double* ck = batch.coords + k * stride;
                const __m256d d =
                    _mm256_sub_pd(_mm256_set1_pd(ck[i]), _mm256_loadu_pd(ck + j));
                d2 = _mm256_fmadd_pd(d, d, d2);
            }
            const __m256d e = exp_pd(_mm256_mul_pd(d2, neg_inv_c));
            const __m256d g = _mm256_fnmadd_pd(b, e, a);
            _mm256_storeu_pd(gain + j, _mm256_mul_pd(_mm256_loadu_pd(w_row + j), g));
        }

        // Pass 2: v_ik = -sum_j gain_j (x_ik - x_jk).
        double* v = batch.velocities + i * dim;
        for (std::size_t k = 0; k < dim; ++k) {
            const double* ck = batch.coords + k * stride;
            const __m256d xi = _mm256_set1_pd(ck[i]);
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t j = 0; j < stride; j += kPadding) {
                const __m256d d = _mm256_sub_pd(xi, _mm256_loadu_pd(ck + j));
                acc = _mm256_fnmadd_pd(_mm256_loadu_pd(gain + j), d, acc);
            }
            v[k] = hsum(acc);
        }
    }
}

}  // namespace swarm::simd

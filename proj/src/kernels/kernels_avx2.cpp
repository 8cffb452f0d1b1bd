#include "cvd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define CVD_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define CVD_HAVE_AVX2_BUILD 0
#endif

namespace cvd::kernels {

#if CVD_HAVE_AVX2_BUILD
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    double acc = hsum(acc0);
    for (; i < n; ++i) acc += a[i];
    return acc;
}

double sqnorm_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    double acc = hsum(acc0);
    for (; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double sqdist_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc0 = _mm256_fmadd_pd(d, d, acc0);
    }
    double acc = hsum(acc0);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

// mul+add rather than fmadd: keeps results bit-identical to the scalar
// reference (two roundings per element in both paths).
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double* x, double alpha, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

double sparse_dot_avx2(const std::uint32_t* idx, const double* val,
                       std::size_t nnz, const double* dense) {
    __m256d acc0 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= nnz; i += 4) {
        const __m128i vidx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
        const __m256d gathered = _mm256_i32gather_pd(dense, vidx, 8);
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(val + i), gathered, acc0);
    }
    double acc = hsum(acc0);
    for (; i < nnz; ++i) acc += val[i] * dense[idx[i]];
    return acc;
}

// Scatter has no AVX2 primitive; plain loop (indices are strictly
// increasing in every caller, so no aliasing hazard either way).
void sparse_axpy_avx2(double alpha, const std::uint32_t* idx,
                      const double* val, std::size_t nnz, double* y) {
    for (std::size_t i = 0; i < nnz; ++i) y[idx[i]] += alpha * val[i];
}

const Ops avx2_table = {
    "avx2",       dot_avx2,   sum_avx2,        sqnorm_avx2,
    sqdist_avx2,  axpy_avx2,  scale_avx2,      sparse_dot_avx2,
    sparse_axpy_avx2,
};

}  // namespace
#endif  // CVD_HAVE_AVX2_BUILD

bool avx2_supported() {
#if CVD_HAVE_AVX2_BUILD
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* avx2_ops() {
#if CVD_HAVE_AVX2_BUILD
    return avx2_supported() ? &avx2_table : nullptr;
#else
    return nullptr;
#endif
}

}  // namespace cvd::kernels

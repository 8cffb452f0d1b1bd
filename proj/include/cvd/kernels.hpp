#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cvd::kernels {

// Double-precision kernels backing the arithmetic-heavy inner loops
// (classifier training, LSTM/conv math, SMOTE distances, vector norms).
//
// Two implementations ship: a scalar reference and an AVX2 variant picked at
// runtime. Elementwise kernels (axpy, scale) are bit-identical between the
// two (no FMA contraction); reductions (dot, sum, sqnorm, sqdist,
// sparse_dot) reassociate under SIMD and agree with the scalar reference to
// tight relative tolerance, which the equivalence tests pin down.
struct Ops {
    const char* name;

    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    double (*sqnorm)(const double* a, std::size_t n);
    double (*sqdist)(const double* a, const double* b, std::size_t n);

    // y[i] += alpha * x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // x[i] *= alpha
    void (*scale)(double* x, double alpha, std::size_t n);

    // dot of a sparse vector (idx/val pairs) with a dense vector
    double (*sparse_dot)(const std::uint32_t* idx, const double* val,
                         std::size_t nnz, const double* dense);
    // y[idx[i]] += alpha * val[i]
    void (*sparse_axpy)(double alpha, const std::uint32_t* idx,
                        const double* val, std::size_t nnz, double* y);
};

// Active implementation. First call resolves the choice: the CVDRISK_KERNELS
// environment variable ("scalar" or "avx2") wins, otherwise the best
// supported variant.
const Ops& active();

// Force a specific implementation ("scalar", "avx2", "auto"). Returns false
// if the request cannot be honored (unknown name or unsupported CPU).
bool select(std::string_view name);

const Ops& scalar_ops();

// nullptr when not compiled in or the CPU lacks AVX2+FMA.
const Ops* avx2_ops();

bool avx2_supported();

}  // namespace cvd::kernels

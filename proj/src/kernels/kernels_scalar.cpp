#include "cvd/kernels.hpp"

// Scalar reference kernels. These define the semantics the SIMD variants are
// tested against; keep them as plain loops.

namespace cvd::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

double sqnorm_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double sqdist_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double* x, double alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double sparse_dot_scalar(const std::uint32_t* idx, const double* val,
                         std::size_t nnz, const double* dense) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nnz; ++i) acc += val[i] * dense[idx[i]];
    return acc;
}

void sparse_axpy_scalar(double alpha, const std::uint32_t* idx,
                        const double* val, std::size_t nnz, double* y) {
    for (std::size_t i = 0; i < nnz; ++i) y[idx[i]] += alpha * val[i];
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",        dot_scalar,   sum_scalar,        sqnorm_scalar,
        sqdist_scalar,   axpy_scalar,  scale_scalar,      sparse_dot_scalar,
        sparse_axpy_scalar,
    };
    return ops;
}

}  // namespace cvd::kernels

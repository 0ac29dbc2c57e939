#include "combgas/simd.hpp"

namespace combgas::simd {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double recip_sum_scalar(const double* w, const double* c, double s, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] / (s + c[i]);
    return acc;
}

double q_row_scalar(const double* w, const double* c, const double* u, const double* v, double s,
                    double a, double p, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * ((a + u[i]) * p * v[i] - 1.0) / (s + c[i]);
    return acc;
}

void spmv_scalar(std::size_t rows, const int* offsets, const int* cols, const double* vals,
                 const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) {
        double acc = 0.0;
        for (int k = offsets[r]; k < offsets[r + 1]; ++k) acc += vals[k] * x[cols[k]];
        y[r] = acc;
    }
}

}  // namespace

namespace detail {
const Kernels scalar_table{"scalar", dot_scalar, axpy_scalar, recip_sum_scalar, q_row_scalar,
                           spmv_scalar};
}

}  // namespace combgas::simd

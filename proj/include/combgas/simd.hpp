#pragma once
// Numeric inner loops with a scalar reference and vector variants.
// The variant is chosen once at startup from cpuid; COMBGAS_SIMD=scalar forces the reference.

#include <cstddef>

namespace combgas::simd {

struct Kernels {
    const char* name;
    double (*dot)(const double* x, const double* y, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // sum_i w[i] / (s + c[i])
    double (*recip_sum)(const double* w, const double* c, double s, std::size_t n);
    // sum_i w[i] * ((a + u[i]) * p * v[i] - 1) / (s + c[i])
    double (*q_row)(const double* w, const double* c, const double* u, const double* v,
                    double s, double a, double p, std::size_t n);
    // y = M x for CSR (offsets has rows+1 entries)
    void (*spmv)(std::size_t rows, const int* offsets, const int* cols, const double* vals,
                 const double* x, double* y);
};

const Kernels& scalar_kernels();
// nullptr when the build or the cpu lacks AVX2+FMA
const Kernels* avx2_kernels();
const Kernels& active();

inline double dot(const double* x, const double* y, std::size_t n) { return active().dot(x, y, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
inline double recip_sum(const double* w, const double* c, double s, std::size_t n) {
    return active().recip_sum(w, c, s, n);
}
inline double q_row(const double* w, const double* c, const double* u, const double* v, double s,
                    double a, double p, std::size_t n) {
    return active().q_row(w, c, u, v, s, a, p, n);
}
inline void spmv(std::size_t rows, const int* offsets, const int* cols, const double* vals,
                 const double* x, double* y) {
    active().spmv(rows, offsets, cols, vals, x, y);
}

namespace detail {
extern const Kernels scalar_table;
extern const Kernels* const avx2_table;  // null if not compiled in
}  // namespace detail

}  // namespace combgas::simd

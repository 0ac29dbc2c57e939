#include "combgas/simd.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace combgas::simd {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
        a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
    }
    for (; i + 4 <= n; i += 4) a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    double s = hsum(_mm256_add_pd(a0, a1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

double recip_sum_avx2(const double* w, const double* c, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_add_pd(a0, _mm256_div_pd(_mm256_loadu_pd(w + i), _mm256_add_pd(vs, _mm256_loadu_pd(c + i))));
        a1 = _mm256_add_pd(a1, _mm256_div_pd(_mm256_loadu_pd(w + i + 4),
                                             _mm256_add_pd(vs, _mm256_loadu_pd(c + i + 4))));
    }
    for (; i + 4 <= n; i += 4)
        a0 = _mm256_add_pd(a0, _mm256_div_pd(_mm256_loadu_pd(w + i), _mm256_add_pd(vs, _mm256_loadu_pd(c + i))));
    double acc = hsum(_mm256_add_pd(a0, a1));
    for (; i < n; ++i) acc += w[i] / (s + c[i]);
    return acc;
}

double q_row_avx2(const double* w, const double* c, const double* u, const double* v, double s,
                  double a, double p, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s), va = _mm256_set1_pd(a), vp = _mm256_set1_pd(p);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d num = _mm256_mul_pd(_mm256_mul_pd(_mm256_add_pd(va, _mm256_loadu_pd(u + i)), vp),
                                    _mm256_loadu_pd(v + i));
        num = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_sub_pd(num, one));
        acc = _mm256_add_pd(acc, _mm256_div_pd(num, _mm256_add_pd(vs, _mm256_loadu_pd(c + i))));
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += w[i] * ((a + u[i]) * p * v[i] - 1.0) / (s + c[i]);
    return r;
}

void spmv_avx2(std::size_t rows, const int* offsets, const int* cols, const double* vals,
               const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) {
        int k = offsets[r];
        const int end = offsets[r + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; k + 4 <= end; k += 4) {
            __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + k));
            __m256d xv = _mm256_i32gather_pd(x, idx, 8);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(vals + k), xv, acc);
        }
        double s = hsum(acc);
        for (; k < end; ++k) s += vals[k] * x[cols[k]];
        y[r] = s;
    }
}

const Kernels table{"avx2", dot_avx2, axpy_avx2, recip_sum_avx2, q_row_avx2, spmv_avx2};

}  // namespace

namespace detail {
const Kernels* const avx2_table = &table;
}

}  // namespace combgas::simd

#else

namespace combgas::simd::detail {
const Kernels* const avx2_table = nullptr;
}

#endif

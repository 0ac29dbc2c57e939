#include "combgas/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "combgas/errors.hpp"
#include "combgas/simd.hpp"

namespace combgas {

double bose_smooth_part(double beta, double h) {
    const double x = beta * h;
    if (std::fabs(x) < 1e-4) return -0.5 + x / 12.0 - x * x * x / 720.0;
    return 1.0 / std::expm1(x) - 1.0 / x;
}

ChebSeries cheb_fit(const std::function<double(double)>& f, double a, double b, double tail_tol, int max_degree) {
    if (!(b > a)) throw InputError("cheb_fit: empty interval");
    ChebSeries s;
    s.a = a;
    s.b = b;
    for (int n = 16;; n *= 2) {
        std::vector<double> fx(n);
        for (int j = 0; j < n; ++j) {
            const double t = std::cos(std::numbers::pi * (j + 0.5) / n);
            fx[j] = f(0.5 * (b - a) * t + 0.5 * (a + b));
        }
        std::vector<double> c(n);
        for (int k = 0; k < n; ++k) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += fx[j] * std::cos(std::numbers::pi * k * (j + 0.5) / n);
            c[k] = 2.0 * acc / n;
        }
        double cmax = 0.0;
        for (double v : c) cmax = std::max(cmax, std::fabs(v));
        double tail = 0.0;
        for (int k = n - n / 8; k < n; ++k) tail = std::max(tail, std::fabs(c[k]));
        if (tail <= tail_tol * cmax || 2 * n > max_degree) {
            // drop trailing coefficients below the tolerance
            int keep = n;
            while (keep > 1 && std::fabs(c[keep - 1]) <= tail_tol * cmax) --keep;
            c.resize(keep);
            s.c = std::move(c);
            s.tail = tail;
            if (tail > tail_tol * cmax) throw NumericError("cheb_fit: no convergence up to the maximal degree");
            return s;
        }
    }
}

double cheb_eval(const ChebSeries& s, double x) {
    const double t = (2.0 * x - s.a - s.b) / (s.b - s.a);
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = s.c.size(); k-- > 1;) {
        const double b0 = 2.0 * t * b1 - b2 + s.c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + 0.5 * s.c[0];
}

std::vector<double> cheb_apply(const ChebSeries& s, std::size_t n,
                               const std::function<void(const double*, double*)>& op,
                               const std::vector<double>& x) {
    if (x.size() != n) throw InputError("cheb_apply: vector size mismatch");
    const double alpha = 2.0 / (s.b - s.a), shift = -(s.a + s.b) / (s.b - s.a);
    // t-scaled operator: T y = alpha M y + shift y
    std::vector<double> tmp(n);
    auto apply_t = [&](const std::vector<double>& in, std::vector<double>& out) {
        op(in.data(), tmp.data());
        for (std::size_t i = 0; i < n; ++i) out[i] = alpha * tmp[i] + shift * in[i];
    };
    std::vector<double> y(n, 0.0), prev = x, cur(n), next(n);
    simd::axpy(0.5 * s.c[0], prev.data(), y.data(), n);
    if (s.c.size() == 1) return y;
    apply_t(prev, cur);
    simd::axpy(s.c[1], cur.data(), y.data(), n);
    for (std::size_t k = 2; k < s.c.size(); ++k) {
        apply_t(cur, next);
        for (std::size_t i = 0; i < n; ++i) next[i] = 2.0 * next[i] - prev[i];
        simd::axpy(s.c[k], next.data(), y.data(), n);
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return y;
}

std::vector<double> cheb_apply_graph(const ChebSeries& s, const Graph& g, double shift, const std::vector<double>& x) {
    const std::size_t n = g.vertex_count();
    return cheb_apply(s, n,
                      [&](const double* in, double* out) {
                          g.apply(in, out);
                          for (std::size_t i = 0; i < n; ++i) out[i] = shift * in[i] - out[i];
                      },
                      x);
}

std::vector<double> cheb_apply_tridiagonal(const ChebSeries& s, const std::vector<double>& diag,
                                           const std::vector<double>& off, const std::vector<double>& x) {
    const std::size_t n = diag.size();
    if (off.size() + 1 != n && !(n == 0 && off.empty())) throw InputError("tridiagonal: off-diagonal size");
    return cheb_apply(s, n,
                      [&](const double* in, double* out) {
                          for (std::size_t i = 0; i < n; ++i) {
                              double v = diag[i] * in[i];
                              if (i > 0) v += off[i - 1] * in[i - 1];
                              if (i + 1 < n) v += off[i] * in[i + 1];
                              out[i] = v;
                          }
                      },
                      x);
}

}  // namespace combgas

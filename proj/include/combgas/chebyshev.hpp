#pragma once
// Chebyshev expansion of a scalar function on [a, b] and its application f(M) x to symmetric
// operators with spectrum inside [a, b].

#include <functional>
#include <vector>

#include "combgas/graph.hpp"

namespace combgas {

struct ChebSeries {
    double a = -1.0, b = 1.0;
    std::vector<double> c;  // f(x) = c0/2 + sum_k c_k T_k(t), t = (2x - a - b)/(b - a)
    double tail = 0.0;      // max |c_k| over the discarded tail estimate
};

// degree doubles until the trailing coefficients drop below tail_tol * max|c|
ChebSeries cheb_fit(const std::function<double(double)>& f, double a, double b, double tail_tol = 1e-13,
                    int max_degree = 1 << 14);
double cheb_eval(const ChebSeries& s, double x);

// y = f(M) x for an operator given by its action
std::vector<double> cheb_apply(const ChebSeries& s, std::size_t n,
                               const std::function<void(const double*, double*)>& op,
                               const std::vector<double>& x);
// M = shift I - A_g
std::vector<double> cheb_apply_graph(const ChebSeries& s, const Graph& g, double shift, const std::vector<double>& x);
// M symmetric tridiagonal
std::vector<double> cheb_apply_tridiagonal(const ChebSeries& s, const std::vector<double>& diag,
                                           const std::vector<double>& off, const std::vector<double>& x);

// (e^{beta h} - 1)^{-1} - (beta h)^{-1}, continuous at 0 with value -1/2
double bose_smooth_part(double beta, double h);

}  // namespace combgas

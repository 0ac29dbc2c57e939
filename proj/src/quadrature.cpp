#include "combgas/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "combgas/errors.hpp"

namespace combgas {
namespace {

using boost::math::quadrature::gauss_kronrod;
constexpr double kPi = std::numbers::pi;

double gk(const std::function<double(double)>& f, double a, double b, double tol, unsigned depth = 15) {
    double err = 0.0;
    return gauss_kronrod<double, 31>::integrate(f, a, b, depth, tol, &err);
}

// prod_i e^{-t} I_{delta_i}(t)
double bessel_product(const std::vector<int>& delta, double t) {
    double p = 1.0;
    for (int k : delta) p *= scaled_bessel_i(k, t);
    return p;
}

// int_0^{2^kmax} f(t) dt on dyadic pieces
template <class F>
std::vector<double> dyadic_partials(F f, int kmax, double tol) {
    std::vector<double> partials;
    double acc = gk(f, 0.0, 1.0, tol);
    partials.push_back(acc);
    for (int k = 0; k < kmax; ++k) {
        acc += gk(f, std::ldexp(1.0, k), std::ldexp(1.0, k + 1), tol);
        partials.push_back(acc);
    }
    return partials;
}

constexpr int kDyadic = 44;

}  // namespace

double scaled_bessel_i(int k, double t) {
    if (t < 0) throw InputError("scaled_bessel_i: t must be >= 0");
    k = std::abs(k);
    if (t == 0.0) return k == 0 ? 1.0 : 0.0;
    if (t <= 600.0) return boost::math::cyl_bessel_i(k, t) * std::exp(-t);
    // Hankel expansion: e^{-t} I_k(t) ~ (2 pi t)^{-1/2} sum_m (-1)^m a_m / t^m
    const double mu = 4.0 * k * k;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 40; ++m) {
        const double next = -term * (mu - (2.0 * m - 1) * (2.0 * m - 1)) / (m * 8.0 * t);
        if (std::fabs(next) >= std::fabs(term)) break;
        term = next;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum / std::sqrt(2.0 * kPi * t);
}

double lattice_green(int d, const std::vector<int>& delta) {
    if (d < 3) throw InputError("lattice_green: diverges for d < 3");
    if (static_cast<int>(delta.size()) != d) throw InputError("lattice_green: delta has wrong dimension");
    const auto p = dyadic_partials([&](double t) { return bessel_product(delta, t); }, kDyadic, 1e-14);
    const double big_t = std::ldexp(1.0, kDyadic);
    const double tail = std::pow(2.0 * kPi, -0.5 * d) * std::pow(big_t, 1.0 - 0.5 * d) / (0.5 * d - 1.0);
    return p.back() + tail;
}

double lattice_a(int d, const std::vector<int>& delta) {
    if (static_cast<int>(delta.size()) != d) throw InputError("lattice_a: delta has wrong dimension");
    const std::vector<int> zero(d, 0);
    const auto p = dyadic_partials([&](double t) { return bessel_product(zero, t) - bessel_product(delta, t); },
                                   kDyadic, 1e-14);
    double norm2 = 0.0;
    for (int k : delta) norm2 += double(k) * k;
    const double big_t = std::ldexp(1.0, kDyadic);
    const double tail = std::pow(2.0 * kPi, -0.5 * d) * norm2 * std::pow(big_t, -0.5 * d) / d;
    return p.back() + tail;
}

double q_limit(int d, const std::vector<int>& delta) {
    bool origin = true;
    for (int k : delta) origin = origin && k == 0;
    return -lattice_a(d, delta) - (origin ? 1.0 / d : 0.0);
}

double torus_cubature(int d, const std::function<double(const double*)>& f, double tol) {
    if (d < 1) throw InputError("torus_cubature: d >= 1");
    std::vector<double> x(d);
    std::function<double(int)> level = [&](int i) -> double {
        return gk(
            [&, i](double th) {
                x[i] = th;
                return i + 1 == d ? f(x.data()) : level(i + 1);
            },
            0.0, kPi, tol, 12);
    };
    return level(0) / std::pow(kPi, d);
}

DivergenceProbe green_divergence_probe(int d, int kmax) {
    const std::vector<int> zero(d, 0);
    DivergenceProbe pr;
    pr.partials = dyadic_partials([&](double t) { return bessel_product(zero, t); }, kmax, 1e-12);
    const auto& p = pr.partials;
    const std::size_t m = p.size();
    const double d1 = p[m - 1] - p[m - 2], d0 = p[m - 2] - p[m - 3];
    const double r = d1 / d0;
    // a convergent tail contracts geometrically; r >= 0.9 means logarithmic or power growth
    if (r < 0.9 && p.back() < 1e12) {
        pr.converges = true;
        pr.value = p.back() + d1 * r / (1.0 - r);
    } else {
        pr.value = p.back();
    }
    return pr;
}

double arcsine_bose_integral(double beta, double gap) {
    if (!(beta > 0)) throw InputError("beta must be > 0");
    if (!(gap > 0)) throw InputError("arcsine_bose_integral: gap must be > 0");
    auto f = [&](double phi) { const double h = std::sin(0.5 * phi);
        return 1.0 / std::expm1(beta * (gap + 4.0 * h * h)); };
    return gk(f, 0.0, kPi, 1e-13, 20) / kPi;
}

}  // namespace combgas

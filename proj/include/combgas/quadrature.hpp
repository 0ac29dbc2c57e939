#pragma once
// Lattice Green functions of Z^d via the Bessel heat-kernel representation, a nested
// adaptive cubature of the torus integrals as a cross-check, and the arcsine Bose integral.
//
// With s(theta) = sum_i (1 - cos theta_i) and dm the normalized measure on the torus,
//   G(delta) = int dm cos(delta.theta) / s = int_0^inf prod_i e^{-t} I_{delta_i}(t) dt   (d >= 3)
//   a(delta) = int dm (1 - cos(delta.theta)) / s                                      (all d)

#include <functional>
#include <vector>

namespace combgas {

// e^{-t} I_k(t), t >= 0; asymptotic series beyond the overflow range
double scaled_bessel_i(int k, double t);

double lattice_green(int d, const std::vector<int>& delta);
double lattice_a(int d, const std::vector<int>& delta);
// Q(delta) = int dm [((1/d) sum cos theta_i) cos(delta.theta) - 1] / s = -a(delta) - [delta = 0]/d
double q_limit(int d, const std::vector<int>& delta);

// Nested adaptive Gauss-Kronrod over [0,pi]^d of an even integrand, divided by pi^d.
double torus_cubature(int d, const std::function<double(const double*)>& f, double tol = 1e-9);

// Partial Green integrals over [0, 2^k]; recurrent when the increments stop contracting.
struct DivergenceProbe {
    bool converges = false;
    double value = 0.0;  // extrapolated when converging, last partial otherwise
    std::vector<double> partials;
};
DivergenceProbe green_divergence_probe(int d, int kmax = 60);

// (1/pi) int_0^pi dphi / (e^{beta(gap + 2 - 2cos phi)} - 1), gap > 0: the Bose integral of the
// arcsine law of A_Z with H = 2 + gap - A.
double arcsine_bose_integral(double beta, double gap);

}  // namespace combgas

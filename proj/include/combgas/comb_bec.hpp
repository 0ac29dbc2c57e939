#pragma once
// Ideal Bose gas on the comb Z^d -| Z. Finite volumes use the periodic base (Z_{2n+1})^d with
// fibers [-n, n]; A = I x A_Y + A_X x P_0 and H = ||A|| - A with ||A|| = 2 sqrt(d^2+1).
//
// Base Fourier modes reduce everything to fiber operators lam - A_Y - a_q P_0 with
// a_q = 2 sum_i cos(theta_i). The resolvent at lam_n = ||A|| - mu_n splits into
//   I x R_Y  +  2d(d+eps) sum_{j,k} (Q_n(j-k) + k+_n + k0_n) |z><z|,   z = R_Y delta_0,
// and the Bose function into (beta K)^{-1} plus the bounded part f(K) = (e^{beta K}-1)^{-1} - (beta K)^{-1}.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "combgas/extrapolate.hpp"
#include "combgas/graph.hpp"

namespace combgas {

using cplx = std::complex<double>;

double comb_norm(int d);  // 2 sqrt(d^2 + 1)

// <delta_0, R_Y(lam_n) delta_0> = 1 / (2(d + eps_n)), lam_n = ||A|| - mu
double eps_n(int d, int n, double mu);

struct LatticeCoeffs {
    double k0 = 0.0;     // 1 / ((2n+1)^d eps), +inf at eps = 0
    double kplus = 0.0;  // mean of 1/(eps + s(theta)) over the nonzero grid points
};
LatticeCoeffs lattice_coeffs(int d, int n, double eps);
// Q_n(delta): the same grid mean of [((1/d) sum cos) cos(delta.theta) - 1] / (eps + s)
double q_entry(int d, int n, double eps, const std::vector<int>& delta);

// finitely supported vector, labels (j_1..j_d, fiber j)
struct FockVector {
    std::map<Label, cplx> entries;
    static FockVector site(const Label& l, cplx value = 1.0);
};
// "0,0,0,0" -> site vector at that label
FockVector parse_fock_site(const std::string& text, int d);

struct MuSchedule {
    enum class Kind { explicit_list, condensate_scaled, power, fixed_density } kind = Kind::condensate_scaled;
    double c = 1.0;          // condensate_scaled: mu_n = -1/(c (2n+1)^d)
    double power = 1.0;      // power: mu_n = -n^{-power}
    double rho = 0.0;        // fixed_density
    std::map<int, double> values;
};

struct CombRunConfig {
    int d = 3;
    double beta = 1.0;
    MuSchedule schedule;
    std::vector<int> ns;
};

// mu_n for the schedule (fixed density solves the finite-volume density equation)
double schedule_mu(const CombRunConfig& cfg, int n);

struct TwoPointBreakdown {
    double mu = 0.0, eps = 0.0;
    cplx smooth, line, q, condensate, total;
};
TwoPointBreakdown two_point_finite(int d, double beta, int n, double mu, const FockVector& xi, const FockVector& eta);
TwoPointBreakdown two_point_finite(const CombRunConfig& cfg, int n, const FockVector& xi, const FockVector& eta);

// dense eigendecomposition of the assembled comb; oracle for small volumes
cplx two_point_dense(int d, double beta, int n, double mu, const FockVector& xi, const FockVector& eta);

struct TwoPointLimit {
    cplx smooth, line, q, condensate, total;
    double smooth_uncertainty = 0.0;
    cplx overlap_eta, overlap_xi;          // <eta, v>, <v, xi> with v = 1 x w/||w||
    cplx raw_overlap_eta, raw_overlap_xi;  // same with the unnormalized w = R_Z(||A||) delta_0
};
// d >= 3 only; throws DivergenceError otherwise
TwoPointLimit two_point_limit(int d, double beta, double c, const FockVector& xi, const FockVector& eta);

// generalized PF vector of the comb: e^{-|j| theta}/(2 sinh theta), cosh theta = sqrt(d^2+1)
double pf_generalized_vector_comb(int d, const Label& site);

struct CondensateCoefficient {
    double kprime = 0.0;   // beta^{-1} 2d(d+eps) (k0 + k+) ||R_Y delta_0||^2
    double kprime0 = 0.0;  // the k0 part alone
    double z_norm2 = 0.0;  // ||R_Y(lam_n) delta_0||^2
    cplx overlap_xi;       // <v_n, xi> with v_n = 1 x w_n, w_n = R_Y delta_0 / ||R_Y delta_0||
};
CondensateCoefficient condensate_coefficient(int d, double beta, int n, double mu, const FockVector& xi);

// Spectrum of the finite comb grouped by base mode: fiber eigenvalues of A_Y + a P_0 with multiplicity.
struct FiberBlock {
    double a = 0.0;
    double multiplicity = 0.0;
    std::vector<double> eig;  // ascending
};
std::vector<FiberBlock> comb_fiber_blocks(int d, int n);

// per-site density (1/|Lambda_n|) Tr (e^{beta(H_n - mu)} - 1)^{-1}
double comb_density(const std::vector<FiberBlock>& blocks, int d, double beta, double mu);
double comb_finite_norm(int d, int n);  // ||A_{Lambda_n}||
// finite-volume mu with density rho
double comb_solve_mu(int d, int n, double beta, double rho);

struct DensityLimit {
    std::vector<int> ns;
    std::vector<double> values;
    Extrapolation limit;
};
DensityLimit density_limit(const CombRunConfig& cfg);

}  // namespace combgas

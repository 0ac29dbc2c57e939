#pragma once
// Integrated density of states, per-site traces, Bose densities, chemical potential, transience.

#include <functional>
#include <string>
#include <vector>

#include "combgas/extrapolate.hpp"
#include "combgas/family.hpp"

namespace combgas {

// Empirical measure: equal-weight atoms at the eigenvalues of H.
struct StepMeasure {
    std::vector<double> atoms;  // ascending, with repeats
    double weight = 0.0;        // mass of each atom
    std::string origin;

    double cumulative(double x) const;          // N(x) = mass of atoms <= x
    double mass_in(double lo, double hi) const;  // mass in [lo, hi]
    double total() const { return weight * static_cast<double>(atoms.size()); }
    // distinct breakpoints and right-continuous cumulative values
    std::vector<std::pair<double, double>> steps() const;
};

StepMeasure measure_from_values(std::vector<double> h, std::string origin);
// atoms shift - a over the adjacency spectrum of g
StepMeasure ids_finite(const Graph& g, double shift, int dense_cap = 4096);

// All adjacency eigenvalues of Lambda_n. Comb and fiber families use the base-mode reduction,
// everything else the dense spectrum.
std::vector<double> family_spectrum(const GraphFamily& f, int n, int dense_cap = 4096);
std::vector<double> family_laplacian_spectrum(const GraphFamily& f, int n, int dense_cap = 4096);

struct TraceResult {
    std::vector<int> ns;
    std::vector<double> values;  // Tr phi(A_n) / |Lambda_n|
    std::vector<double> folner;
    Extrapolation limit;         // Richardson in the Folner ratio
};
// phi acts on adjacency eigenvalues
TraceResult trace_functional(const GraphFamily& f, const std::function<double(double)>& phi,
                             const std::vector<int>& ns, int dense_cap = 4096);

struct GapReport {
    std::vector<int> ns;
    std::vector<double> norms;    // ||A_n||
    double e0 = 0.0;              // ||A|| - extrapolated ||A_n||
    double em = 0.0;              // first grid energy whose IDS mass does not vanish
    double gap = 0.0;
    std::vector<double> grid;
    std::vector<double> exponents;  // fitted decay exponent of N_n([0, h]) in n, per grid point
};
// H_n = norm - A_n; grid spacing dh on [0, hmax]; vanishing mass = fitted exponent below -0.5
GapReport e0_em(const GraphFamily& f, const std::vector<int>& ns, double norm, double dh = 0.005,
                double hmax = 2.0, int dense_cap = 4096);

struct TaggedValue {
    double value = 0.0;
    bool infinite = false;
};
// sum over atoms of weight / (e^{beta(h - mu)} - 1)
TaggedValue bose_density(const StepMeasure& m, double beta, double mu);
// arcsine law of A_Z with H = shift - A: infinite exactly when shift - mu = 2
TaggedValue bose_density_chain(double beta, double shift, double mu);
// base Z, chemical potential -norm_gap
double critical_density_shifted(double beta, double norm_gap);

struct MuSolution {
    double mu = 0.0;
    double density = 0.0;
    double e0 = 0.0;  // bottom of the measure
    int iterations = 0;
};
// unique mu < min atom with bose_density = rho; bisection in log(E0 - mu)
MuSolution solve_mu(const StepMeasure& m, double beta, double rho);

enum class Mollifier { linear_ramp, smoothstep };
double mollifier_value(Mollifier kind, double eps, double h);
// int (1 - f_eps(h)) / (e^{beta(h - mu)} - 1) dN(h)
double condensate_part(const StepMeasure& m, double beta, double mu, double eps, Mollifier kind);

enum class TransienceVerdict { transient, recurrent, inconclusive };
std::string verdict_name(TransienceVerdict v);
struct TransienceReport {
    TransienceVerdict verdict = TransienceVerdict::inconclusive;
    double value = 0.0;            // Green integral when transient
    std::vector<double> witness;   // partial integrals or k_n sequence
    std::string method;
};
TransienceReport transience(const GraphFamily& f);

}  // namespace combgas

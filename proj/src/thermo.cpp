#include "combgas/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "combgas/comb_bec.hpp"
#include "combgas/errors.hpp"
#include "combgas/quadrature.hpp"
#include "combgas/spectral.hpp"

namespace combgas {

double StepMeasure::cumulative(double x) const {
    return weight * static_cast<double>(std::upper_bound(atoms.begin(), atoms.end(), x) - atoms.begin());
}

double StepMeasure::mass_in(double lo, double hi) const {
    if (hi < lo) return 0.0;
    const auto a = std::lower_bound(atoms.begin(), atoms.end(), lo);
    const auto b = std::upper_bound(atoms.begin(), atoms.end(), hi);
    return weight * static_cast<double>(b - a);
}

std::vector<std::pair<double, double>> StepMeasure::steps() const {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (i + 1 == atoms.size() || atoms[i + 1] != atoms[i]) out.emplace_back(atoms[i], weight * double(i + 1));
    return out;
}

StepMeasure measure_from_values(std::vector<double> h, std::string origin) {
    if (h.empty()) throw InputError("empty spectrum");
    StepMeasure m;
    std::sort(h.begin(), h.end());
    m.weight = 1.0 / static_cast<double>(h.size());
    m.atoms = std::move(h);
    m.origin = std::move(origin);
    return m;
}

StepMeasure ids_finite(const Graph& g, double shift, int dense_cap) {
    auto ev = dense_spectrum(g, dense_cap);
    for (double& e : ev) e = shift - e;
    return measure_from_values(std::move(ev), "empirical(|V|=" + std::to_string(g.vertex_count()) + ")");
}

namespace {

// eigenvalues of I x T_Y + B x P_0 where B has 1D spectrum base1d in each of d directions
std::vector<double> tensor_comb_spectrum(const std::vector<double>& base1d, int d, std::vector<double> fdiag,
                                         const std::vector<double>& foff, int root) {
    std::vector<double> out;
    const int m = static_cast<int>(base1d.size());
    std::vector<int> idx(d, 0);
    while (true) {
        double b = 0.0;
        for (int i : idx) b += base1d[i];
        // distinct permutations of the multi-index
        double mult = 1.0;
        {
            std::vector<int> s = idx;
            double c = 0.0;
            do c += 1.0;
            while (std::next_permutation(s.begin(), s.end()));
            mult = c;
        }
        auto diag = fdiag;
        diag[root] += b;
        const auto ev = tridiagonal_eigenvalues(diag, foff);
        for (double e : ev) out.insert(out.end(), static_cast<std::size_t>(mult), e);
        int i = d - 1;
        while (i >= 0 && idx[i] == m - 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < d; ++k) idx[k] = idx[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool comb_like(const GraphFamily& f, int& d, bool& fibers_only) {
    fibers_only = f.kind == FamilyKind::fibers;
    if ((f.kind == FamilyKind::comb || f.kind == FamilyKind::fibers) && f.perturbation.empty()) {
        d = f.d;
        return true;
    }
    return false;
}

std::vector<double> comb_route(const GraphFamily& f, int n, bool laplacian, int dense_cap) {
    int d = 1;
    bool fibers_only = false;
    comb_like(f, d, fibers_only);
    const Graph line = build_lattice_box(1, n, f.boundary);
    auto base1d = laplacian ? laplacian_spectrum(line, dense_cap) : dense_spectrum(line, dense_cap);
    if (fibers_only) base1d.assign(base1d.size(), 0.0);
    const int side = 2 * n + 1;
    std::vector<double> diag(side, 0.0), off(std::max(side - 1, 0), laplacian ? -1.0 : 1.0);
    if (laplacian)
        for (int i = 0; i < side; ++i) diag[i] = (i > 0) + (i + 1 < side);
    return tensor_comb_spectrum(base1d, d, diag, off, n);
}

}  // namespace

std::vector<double> family_spectrum(const GraphFamily& f, int n, int dense_cap) {
    int d = 1;
    bool fo = false;
    if (comb_like(f, d, fo)) return comb_route(f, n, false, dense_cap);
    return dense_spectrum(f.build(n), dense_cap);
}

std::vector<double> family_laplacian_spectrum(const GraphFamily& f, int n, int dense_cap) {
    int d = 1;
    bool fo = false;
    if (comb_like(f, d, fo)) return comb_route(f, n, true, dense_cap);
    return laplacian_spectrum(f.build(n), dense_cap);
}

TraceResult trace_functional(const GraphFamily& f, const std::function<double(double)>& phi,
                             const std::vector<int>& ns, int dense_cap) {
    if (ns.size() < 3) throw InputError("trace_functional needs at least three volumes");
    TraceResult r;
    std::vector<double> h;
    for (int n : ns) {
        const auto ev = family_spectrum(f, n, dense_cap);
        double s = 0.0;
        for (double e : ev) s += phi(e);
        r.ns.push_back(n);
        r.values.push_back(s / static_cast<double>(ev.size()));
        const double fr = folner_ratio(f, n).value();
        r.folner.push_back(fr);
        h.push_back(fr > 0 ? fr : 1.0 / (2 * n + 1));
    }
    r.limit = richardson(h, r.values, ns.size() >= 4 ? 2 : 1);
    return r;
}

GapReport e0_em(const GraphFamily& f, const std::vector<int>& ns, double norm, double dh, double hmax,
                int dense_cap) {
    if (ns.size() < 3) throw InputError("e0_em needs at least three volumes");
    GapReport g;
    g.ns = ns;
    std::vector<std::vector<double>> spectra;
    for (int n : ns) {
        spectra.push_back(family_spectrum(f, n, dense_cap));
        g.norms.push_back(spectra.back().back());
        if (g.norms.back() > norm + 1e-9)
            throw NumericError("e0_em: finite-volume norm exceeds the supplied ||A||");
    }
    g.e0 = norm - aitken(g.norms).value;
    if (g.e0 < -1e-3) throw NumericError("e0_em: norm extrapolation inconsistent with ||A||");
    g.em = hmax;
    bool found = false;
    std::vector<double> x(ns.begin(), ns.end());
    for (double h = dh; h <= hmax + 1e-12; h += dh) {
        std::vector<double> mass;
        for (const auto& ev : spectra) {
            const auto it = std::lower_bound(ev.begin(), ev.end(), norm - h);
            mass.push_back(static_cast<double>(ev.end() - it) / static_cast<double>(ev.size()));
        }
        double expo = -std::numeric_limits<double>::infinity();
        if (std::all_of(mass.begin(), mass.end(), [](double m) { return m > 0; })) expo = fit_power(x, mass).exponent;
        g.grid.push_back(h);
        g.exponents.push_back(expo);
        if (!found && expo > -0.5) {
            g.em = h;
            found = true;
        }
    }
    g.gap = g.em - std::max(g.e0, 0.0);
    return g;
}

TaggedValue bose_density(const StepMeasure& m, double beta, double mu) {
    if (!(beta > 0)) throw InputError("beta must be > 0");
    if (m.atoms.empty()) return {};
    if (!(mu < m.atoms.front())) throw InputError("bose_density: mu must lie below the spectrum");
    double s = 0.0;
    for (double h : m.atoms) s += 1.0 / std::expm1(beta * (h - mu));
    return {s * m.weight, false};
}

TaggedValue bose_density_chain(double beta, double shift, double mu) {
    if (!(beta > 0)) throw InputError("beta must be > 0");
    if (mu > 0) throw InputError("bose_density_chain: mu must be <= 0");
    const double gap = shift - mu - 2.0;
    if (gap < 0) throw InputError("bose_density_chain: shift - mu must be >= 2");
    if (gap == 0.0) return {std::numeric_limits<double>::infinity(), true};
    return {arcsine_bose_integral(beta, gap), false};
}

double critical_density_shifted(double beta, double norm_gap) {
    if (!(norm_gap > 0)) throw InputError("critical_density_shifted: norm gap must be > 0");
    return bose_density_chain(beta, 2.0, -norm_gap).value;
}

MuSolution solve_mu(const StepMeasure& m, double beta, double rho) {
    if (!(rho > 0)) throw InputError("solve_mu: density must be > 0");
    if (!(beta > 0)) throw InputError("beta must be > 0");
    MuSolution s;
    s.e0 = m.atoms.front();
    auto dens = [&](double t) { return bose_density(m, beta, s.e0 - std::exp(t)).value; };
    // gaps below ~1e-14 |E0| vanish in E0 - gap
    double lo = std::log(1e-14 * std::max(1.0, std::fabs(s.e0))), hi = std::log(std::max(s.e0, 0.0) + 50.0 / beta);
    while (dens(hi) > rho) hi += 1.0;
    for (; s.iterations < 200 && hi - lo > 1e-16 * std::max(1.0, std::fabs(hi)); ++s.iterations) {
        const double mid = 0.5 * (lo + hi);
        if (dens(mid) > rho) lo = mid;
        else hi = mid;
    }
    s.mu = s.e0 - std::exp(0.5 * (lo + hi));
    s.density = bose_density(m, beta, s.mu).value;
    return s;
}

double mollifier_value(Mollifier kind, double eps, double h) {
    if (!(eps > 0)) throw InputError("mollifier: eps must be > 0");
    const double t = std::clamp((h - eps) / eps, 0.0, 1.0);
    return kind == Mollifier::linear_ramp ? t : t * t * (3.0 - 2.0 * t);
}

double condensate_part(const StepMeasure& m, double beta, double mu, double eps, Mollifier kind) {
    if (!(mu < m.atoms.front())) throw InputError("condensate_part: mu must lie below the spectrum");
    double s = 0.0;
    for (double h : m.atoms) {
        const double cut = 1.0 - mollifier_value(kind, eps, h);
        if (cut > 0) s += cut / std::expm1(beta * (h - mu));
    }
    return s * m.weight;
}

std::string verdict_name(TransienceVerdict v) {
    switch (v) {
        case TransienceVerdict::transient: return "transient";
        case TransienceVerdict::recurrent: return "recurrent";
        case TransienceVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

TransienceReport transience(const GraphFamily& f) {
    TransienceReport r;
    int d = 0;
    bool comb = false;
    switch (f.kind) {
        case FamilyKind::lattice_box: d = f.d; break;
        case FamilyKind::chain:
        case FamilyKind::fibers: d = 1; break;
        case FamilyKind::comb: d = f.d; comb = true; break;
        case FamilyKind::catalog:
            if (f.catalog_name == "comb") {
                d = f.params.at("d");
                comb = true;
            }
            break;
    }
    if (d == 0 || !f.perturbation.empty()) {
        r.method = "no Green-function representation for this family";
        return r;
    }
    if (!comb) {
        const auto p = green_divergence_probe(d);
        r.witness = p.partials;
        r.method = "Bessel representation of the torus integral, dyadic partial integrals";
        r.verdict = p.converges ? TransienceVerdict::transient : TransienceVerdict::recurrent;
        if (p.converges) r.value = p.value;
        return r;
    }
    // combs: recurrent iff the base is, checked against k+_n at eps_n -> 0
    r.method = "comb dimension rule cross-checked by k+_n with mu_n = -(2n+1)^{-(d+1)}";
    std::vector<int> ns = d >= 3 ? std::vector<int>{4, 8, 16, 32} : std::vector<int>{16, 64, 256, 1024};
    for (int n : ns) {
        const double mu = -std::pow(2.0 * n + 1.0, -(d + 1.0));
        r.witness.push_back(lattice_coeffs(d, n, eps_n(d, n, mu)).kplus);
    }
    const std::size_t m = r.witness.size();
    const double ratio = (r.witness[m - 1] - r.witness[m - 2]) / (r.witness[m - 2] - r.witness[m - 3]);
    const bool seq_converges = ratio < 0.9;
    if (seq_converges != (d >= 3)) {
        r.method += "; sequence disagrees with the dimension rule";
        return r;
    }
    if (d >= 3) {
        r.verdict = TransienceVerdict::transient;
        r.value = 0.5 * lattice_green(d, std::vector<int>(d, 0));  // <delta, H^{-1} delta> at a backbone site
    } else {
        r.verdict = TransienceVerdict::recurrent;
    }
    return r;
}

}  // namespace combgas

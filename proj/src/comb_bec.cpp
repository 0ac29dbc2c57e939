#include "combgas/comb_bec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "combgas/builders.hpp"
#include "combgas/chebyshev.hpp"
#include "combgas/errors.hpp"
#include "combgas/quadrature.hpp"
#include "combgas/resolvent.hpp"
#include "combgas/simd.hpp"
#include "combgas/spectral.hpp"

namespace combgas {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_volume(int d, int n) {
    if (d < 1) throw InputError("comb: d must be >= 1");
    if (n < 1) throw InputError("comb: n must be >= 1");
}

double volume_base(int d, int n) { return std::pow(2.0 * n + 1.0, d); }

// half-range grid m = 0..n on the torus of side 2n+1; weights count the +-m pair
struct HalfGrid {
    std::vector<double> cos_t, one_minus_cos, weight;
    explicit HalfGrid(int n) {
        const int side = 2 * n + 1;
        for (int m = 0; m <= n; ++m) {
            const double t = kTwoPi * m / side;
            cos_t.push_back(std::cos(t));
            const double s = std::sin(0.5 * t);
            one_minus_cos.push_back(2.0 * s * s);
            weight.push_back(m == 0 ? 1.0 : 2.0);
        }
    }
};

// calls row(prefix_weight, prefix_s, prefix_cos_sum, prefix_index) for each prefix of the first d-1 coordinates
template <class Row>
void for_each_prefix(int d, int n, const HalfGrid& g, Row row) {
    std::vector<int> idx(std::max(d - 1, 0), 0);
    while (true) {
        double w = 1.0, s = 0.0, cs = 0.0;
        for (int m : idx) {
            w *= g.weight[m];
            s += g.one_minus_cos[m];
            cs += g.cos_t[m];
        }
        row(w, s, cs, idx);
        int i = 0;
        for (; i < d - 1; ++i) {
            if (++idx[i] <= n) break;
            idx[i] = 0;
        }
        if (i == d - 1) break;
    }
}

std::vector<double> fiber_z(double lam, int n) {
    std::vector<double> z(2 * n + 1);
    for (int a = -n; a <= n; ++a) z[a + n] = kernel_finite_chain(lam, n, a);
    return z;
}

using FiberMap = std::map<Label, std::vector<cplx>>;  // base label -> fiber vector on [-n, n]

FiberMap split_fibers(const FockVector& v, int d, int n) {
    FiberMap out;
    for (const auto& [l, val] : v.entries) {
        if (static_cast<int>(l.size()) != d + 1) throw InputError("Fock vector label must have d+1 coordinates");
        for (int x : l)
            if (std::abs(x) > n) throw InputError("Fock vector support " + label_string(l) + " escapes Lambda_n");
        Label base(l.begin(), l.end() - 1);
        auto& f = out[base];
        if (f.empty()) f.assign(2 * n + 1, 0.0);
        f[l.back() + n] += val;
    }
    return out;
}

// sorted multisets of size d from {0..n}
template <class F>
void for_each_multiset(int d, int n, F f) {
    std::vector<int> m(d, 0);
    while (true) {
        f(m);
        int i = d - 1;
        while (i >= 0 && m[i] == n) --i;
        if (i < 0) break;
        ++m[i];
        for (int k = i + 1; k < d; ++k) m[k] = m[i];
    }
}

double orbit_size(const std::vector<int>& ms) {
    // distinct permutations times sign choices
    std::vector<int> s = ms;
    double perms = 0.0;
    do perms += 1.0;
    while (std::next_permutation(s.begin(), s.end()));
    int nonzero = 0;
    for (int m : ms) nonzero += m != 0;
    return perms * std::ldexp(1.0, nonzero);
}

// sum over the orbit of e^{i q.delta}
double orbit_phase(const std::vector<int>& ms, const std::vector<int>& delta, int n) {
    const int side = 2 * n + 1;
    std::vector<int> s = ms;
    double acc = 0.0;
    do {
        double p = 1.0;
        for (std::size_t i = 0; i < s.size(); ++i)
            p *= s[i] == 0 ? 1.0 : 2.0 * std::cos(kTwoPi * s[i] * delta[i] / side);
        acc += p;
    } while (std::next_permutation(s.begin(), s.end()));
    return acc;
}

double mode_a(const std::vector<int>& ms, int n) {
    double a = 0.0;
    for (int m : ms) a += 2.0 * std::cos(kTwoPi * m / (2 * n + 1));
    return a;
}

std::vector<int> base_delta(const Label& j, const Label& k) {
    std::vector<int> d(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) d[i] = j[i] - k[i];
    return d;
}

// <eta, f(K) xi> with K = lam - A_{Lambda_n}, f the bounded part of the Bose function
cplx smooth_term(int d, double beta, int n, double lam, const FiberMap& xs, const FiberMap& es) {
    const int side = 2 * n + 1;
    const auto series = cheb_fit([&](double h) { return bose_smooth_part(beta, h); }, 0.0, lam + 2.0 + 2.0 * d);
    std::vector<int> cols;
    for (const auto& [k, f] : xs)
        for (int b = 0; b < side; ++b)
            if (f[b] != 0.0 && std::find(cols.begin(), cols.end(), b) == cols.end()) cols.push_back(b);
    std::vector<std::pair<Label, Label>> pairs;
    for (const auto& [j, fe] : es)
        for (const auto& [k, fx] : xs) pairs.emplace_back(j, k);
    std::vector<double> off(side - 1, -1.0);
    cplx total = 0.0;
    for_each_multiset(d, n, [&](const std::vector<int>& ms) {
        std::vector<double> diag(side, lam);
        diag[n] = lam - mode_a(ms, n);
        std::map<int, std::vector<double>> fcol;
        for (int b : cols) {
            std::vector<double> e(side, 0.0);
            e[b] = 1.0;
            fcol[b] = cheb_apply_tridiagonal(series, diag, off, e);
        }
        for (const auto& [j, k] : pairs) {
            const double ph = orbit_phase(ms, base_delta(j, k), n);
            if (ph == 0.0) continue;
            const auto& fe = es.at(j);
            const auto& fx = xs.at(k);
            cplx acc = 0.0;
            for (int b : cols) {
                if (fx[b] == 0.0) continue;
                cplx row = 0.0;
                for (int a = 0; a < side; ++a)
                    if (fe[a] != 0.0) row += std::conj(fe[a]) * fcol[b][a];
                acc += row * fx[b];
            }
            total += ph * acc;
        }
    });
    return total / volume_base(d, n);
}

}  // namespace

double comb_norm(int d) { return 2.0 * std::sqrt(double(d) * d + 1.0); }

double eps_n(int d, int n, double mu) {
    const double lam = comb_norm(d) - mu;
    if (!(lam > 2.0)) throw InputError("eps_n: lambda_n must exceed 2");
    const double tau = chain_theta(lam);
    return std::sqrt((lam - 2.0) * (lam + 2.0)) / (2.0 * std::tanh((n + 1) * tau)) - d;
}

LatticeCoeffs lattice_coeffs(int d, int n, double eps) {
    require_volume(d, n);
    if (eps < 0) throw InputError("lattice_coeffs: eps must be >= 0");
    const HalfGrid g(n);
    const double vol = volume_base(d, n);
    LatticeCoeffs out;
    out.k0 = eps > 0 ? 1.0 / (vol * eps) : std::numeric_limits<double>::infinity();
    double acc = 0.0;
    for_each_prefix(d, n, g, [&](double w, double s, double, const std::vector<int>& idx) {
        const bool origin = std::all_of(idx.begin(), idx.end(), [](int m) { return m == 0; });
        const std::size_t start = origin ? 1 : 0;
        acc += w * simd::recip_sum(g.weight.data() + start, g.one_minus_cos.data() + start, eps + s,
                                   g.weight.size() - start);
    });
    out.kplus = acc / vol;
    return out;
}

double q_entry(int d, int n, double eps, const std::vector<int>& delta) {
    require_volume(d, n);
    if (static_cast<int>(delta.size()) != d) throw InputError("q_entry: delta has wrong dimension");
    if (eps < 0) throw InputError("q_entry: eps must be >= 0");
    const HalfGrid g(n);
    const int side = 2 * n + 1;
    std::vector<double> u(n + 1), v(n + 1);
    for (int m = 0; m <= n; ++m) {
        u[m] = g.cos_t[m] / d;
        v[m] = std::cos(kTwoPi * m * delta[d - 1] / side);
    }
    double acc = 0.0;
    for_each_prefix(d, n, g, [&](double w, double s, double cs, const std::vector<int>& idx) {
        double p = 1.0;
        bool origin = true;
        for (int i = 0; i < d - 1; ++i) {
            p *= std::cos(kTwoPi * idx[i] * delta[i] / side);
            origin = origin && idx[i] == 0;
        }
        // the zero mode contributes 0 for eps > 0 and is excluded at eps = 0
        const std::size_t start = origin ? 1 : 0;
        acc += w * simd::q_row(g.weight.data() + start, g.one_minus_cos.data() + start, u.data() + start,
                               v.data() + start, eps + s, cs / d, p, n + 1 - start);
    });
    return acc / volume_base(d, n);
}

FockVector FockVector::site(const Label& l, cplx value) {
    FockVector v;
    v.entries[l] = value;
    return v;
}

FockVector parse_fock_site(const std::string& text, int d) {
    Label l;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            l.push_back(std::stoi(tok, &used));
            if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("bad coordinate '" + tok + "' in site '" + text + "'");
        }
    }
    if (static_cast<int>(l.size()) != d + 1)
        throw InputError("site '" + text + "' needs " + std::to_string(d + 1) + " coordinates");
    return FockVector::site(l);
}

double schedule_mu(const CombRunConfig& cfg, int n) {
    const auto& s = cfg.schedule;
    switch (s.kind) {
        case MuSchedule::Kind::explicit_list: {
            auto it = s.values.find(n);
            if (it == s.values.end()) throw InputError("mu schedule has no value for n = " + std::to_string(n));
            if (!(it->second < 0)) throw InputError("mu_n must be < 0");
            return it->second;
        }
        case MuSchedule::Kind::condensate_scaled:
            if (!(s.c > 0)) throw InputError("condensate-scaled schedule needs c > 0");
            return -1.0 / (s.c * volume_base(cfg.d, n));
        case MuSchedule::Kind::power:
            if (!(s.power > 0)) throw InputError("power schedule needs a positive exponent");
            return -std::pow(double(n), -s.power);
        case MuSchedule::Kind::fixed_density: return comb_solve_mu(cfg.d, n, cfg.beta, s.rho);
    }
    throw InputError("unknown schedule");
}

TwoPointBreakdown two_point_finite(int d, double beta, int n, double mu, const FockVector& xi, const FockVector& eta) {
    require_volume(d, n);
    if (!(beta > 0)) throw InputError("beta must be > 0");
    if (!(mu < 0)) throw InputError("two_point_finite: mu_n must be < 0");
    const auto xs = split_fibers(xi, d, n);
    const auto es = split_fibers(eta, d, n);
    const int side = 2 * n + 1;
    const double lam = comb_norm(d) - mu;
    TwoPointBreakdown out;
    out.mu = mu;
    out.eps = eps_n(d, n, mu);

    out.smooth = smooth_term(d, beta, n, lam, xs, es);

    for (const auto& [j, fe] : es) {
        auto it = xs.find(j);
        if (it == xs.end()) continue;
        for (int a = 0; a < side; ++a)
            for (int b = 0; b < side; ++b)
                if (fe[a] != 0.0 && it->second[b] != 0.0)
                    out.line += std::conj(fe[a]) * it->second[b] * path_resolvent_entry(lam, side, a + 1, b + 1);
    }
    out.line /= beta;

    const auto z = fiber_z(lam, n);
    auto overlap_e = [&](const std::vector<cplx>& f) {
        cplx s = 0.0;
        for (int a = 0; a < side; ++a) s += std::conj(f[a]) * z[a];
        return s;
    };
    auto overlap_x = [&](const std::vector<cplx>& f) {
        cplx s = 0.0;
        for (int a = 0; a < side; ++a) s += z[a] * f[a];
        return s;
    };
    const auto kc = lattice_coeffs(d, n, out.eps);
    const double coeff = 2.0 * d * (d + out.eps) / beta;
    std::map<std::vector<int>, double> qcache;
    cplx se = 0.0, sx = 0.0;
    for (const auto& [j, fe] : es) se += overlap_e(fe);
    for (const auto& [k, fx] : xs) sx += overlap_x(fx);
    for (const auto& [j, fe] : es)
        for (const auto& [k, fx] : xs) {
            const auto delta = base_delta(j, k);
            auto it = qcache.find(delta);
            if (it == qcache.end()) it = qcache.emplace(delta, q_entry(d, n, out.eps, delta)).first;
            out.q += (it->second + kc.kplus) * overlap_e(fe) * overlap_x(fx);
        }
    out.q *= coeff;
    out.condensate = coeff * kc.k0 * se * sx;
    out.total = out.smooth + out.line + out.q + out.condensate;
    return out;
}

TwoPointBreakdown two_point_finite(const CombRunConfig& cfg, int n, const FockVector& xi, const FockVector& eta) {
    return two_point_finite(cfg.d, cfg.beta, n, schedule_mu(cfg, n), xi, eta);
}

cplx two_point_dense(int d, double beta, int n, double mu, const FockVector& xi, const FockVector& eta) {
    require_volume(d, n);
    const Graph g = comb_product(build_lattice_box(d, n, Boundary::periodic), build_chain(n), n);
    const int nv = static_cast<int>(g.vertex_count());
    if (nv > kDefaultDenseCap) throw InputError("two_point_dense: volume above the dense cap");
    const Eigen::MatrixXd k = (comb_norm(d) - mu) * Eigen::MatrixXd::Identity(nv, nv) - g.dense_adjacency();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(nv), y = Eigen::VectorXcd::Zero(nv);
    for (const auto& [l, v] : xi.entries) x(g.id(l)) += v;
    for (const auto& [l, v] : eta.entries) y(g.id(l)) += v;
    const Eigen::MatrixXd& vecs = es.eigenvectors();
    cplx acc = 0.0;
    for (int m = 0; m < nv; ++m) {
        const double kappa = es.eigenvalues()(m);
        if (!(kappa > 0)) throw InputError("two_point_dense: mu above the finite-volume bottom");
        const cplx ye = vecs.col(m).cast<cplx>().dot(y);  // conj(y) . v
        const cplx xe = vecs.col(m).cast<cplx>().dot(x);
        acc += std::conj(ye) * xe / std::expm1(beta * kappa);
    }
    return acc;
}

double pf_generalized_vector_comb(int d, const Label& site) {
    if (d < 1) throw InputError("d must be >= 1");
    if (site.empty()) throw InputError("empty site label");
    const double th = chain_theta(comb_norm(d));
    return std::exp(-std::fabs(double(site.back())) * th) / (2.0 * std::sinh(th));
}

TwoPointLimit two_point_limit(int d, double beta, double c, const FockVector& xi, const FockVector& eta) {
    if (d <= 2)
        throw DivergenceError("no limit for d <= 2: the condensate coefficient k'_n diverges for every mu_n -> 0");
    if (!(beta > 0)) throw InputError("beta must be > 0");
    if (c < 0) throw InputError("c must be >= 0");
    int radius = 0;
    for (const auto* v : {&xi, &eta})
        for (const auto& [l, val] : v->entries) {
            if (static_cast<int>(l.size()) != d + 1) throw InputError("Fock vector label must have d+1 coordinates");
            for (int x : l) radius = std::max(radius, std::abs(x));
        }
    const double lam = comb_norm(d);
    TwoPointLimit out;

    // the bounded part is local: finite volumes at mu = 0 converge exponentially
    const int n1 = radius + 6, n2 = radius + 9;
    const cplx s1 = smooth_term(d, beta, n1, lam, split_fibers(xi, d, n1), split_fibers(eta, d, n1));
    const cplx s2 = smooth_term(d, beta, n2, lam, split_fibers(xi, d, n2), split_fibers(eta, d, n2));
    out.smooth = s2;
    out.smooth_uncertainty = std::abs(s2 - s1);

    // fibers keyed by base label, infinite chain coordinates
    std::map<Label, std::map<int, cplx>> xf, ef;
    for (const auto& [l, v] : xi.entries) xf[Label(l.begin(), l.end() - 1)][l.back()] += v;
    for (const auto& [l, v] : eta.entries) ef[Label(l.begin(), l.end() - 1)][l.back()] += v;

    for (const auto& [j, fe] : ef) {
        auto it = xf.find(j);
        if (it == xf.end()) continue;
        for (const auto& [a, ea] : fe)
            for (const auto& [b, xb] : it->second) out.line += std::conj(ea) * xb * kernel_line(lam, a - b);
    }
    out.line /= beta;

    const double wnorm2 = std::sqrt(double(d) * d + 1.0) / (4.0 * d * d * d);
    auto ov_e = [&](const std::map<int, cplx>& f) {
        cplx s = 0.0;
        for (const auto& [a, v] : f) s += std::conj(v) * kernel_line(lam, a);
        return s;
    };
    auto ov_x = [&](const std::map<int, cplx>& f) {
        cplx s = 0.0;
        for (const auto& [a, v] : f) s += kernel_line(lam, a) * v;
        return s;
    };
    const double g0 = lattice_green(d, std::vector<int>(d, 0));
    std::map<std::vector<int>, double> qcache;
    for (const auto& [j, fe] : ef)
        for (const auto& [k, fx] : xf) {
            const auto delta = base_delta(j, k);
            auto it = qcache.find(delta);
            if (it == qcache.end()) it = qcache.emplace(delta, q_limit(d, delta)).first;
            out.q += (it->second + g0) * ov_e(fe) * ov_x(fx);
        }
    out.q *= 2.0 * d * d / beta;

    for (const auto& [j, fe] : ef) out.raw_overlap_eta += ov_e(fe);
    for (const auto& [k, fx] : xf) out.raw_overlap_xi += ov_x(fx);
    out.overlap_eta = out.raw_overlap_eta / std::sqrt(wnorm2);
    out.overlap_xi = out.raw_overlap_xi / std::sqrt(wnorm2);
    out.condensate = (c / beta) * out.overlap_eta * out.overlap_xi;
    out.total = out.smooth + out.line + out.q + out.condensate;
    return out;
}

CondensateCoefficient condensate_coefficient(int d, double beta, int n, double mu, const FockVector& xi) {
    require_volume(d, n);
    if (!(mu < 0)) throw InputError("condensate_coefficient: mu_n must be < 0");
    const double lam = comb_norm(d) - mu;
    const double eps = eps_n(d, n, mu);
    const auto kc = lattice_coeffs(d, n, eps);
    const auto z = fiber_z(lam, n);
    CondensateCoefficient out;
    for (double v : z) out.z_norm2 += v * v;
    const double pref = 2.0 * d * (d + eps) * out.z_norm2 / beta;
    out.kprime = pref * (kc.k0 + kc.kplus);
    out.kprime0 = pref * kc.k0;
    const double zn = std::sqrt(out.z_norm2);
    for (const auto& [k, fx] : split_fibers(xi, d, n))
        for (int b = 0; b < 2 * n + 1; ++b) out.overlap_xi += z[b] / zn * fx[b];
    return out;
}

std::vector<FiberBlock> comb_fiber_blocks(int d, int n) {
    require_volume(d, n);
    const int side = 2 * n + 1;
    std::vector<FiberBlock> out;
    const std::vector<double> off(side - 1, 1.0);
    for_each_multiset(d, n, [&](const std::vector<int>& ms) {
        FiberBlock b;
        b.a = mode_a(ms, n);
        b.multiplicity = orbit_size(ms);
        std::vector<double> diag(side, 0.0);
        diag[n] = b.a;
        b.eig = tridiagonal_eigenvalues(diag, off);
        out.push_back(std::move(b));
    });
    return out;
}

double comb_finite_norm(int d, int n) {
    require_volume(d, n);
    const int side = 2 * n + 1;
    std::vector<double> diag(side, 0.0);
    diag[n] = 2.0 * d;
    return tridiagonal_eigenvalues(diag, std::vector<double>(side - 1, 1.0)).back();
}

double comb_density(const std::vector<FiberBlock>& blocks, int d, double beta, double mu) {
    const double top = comb_norm(d);
    double acc = 0.0, count = 0.0;
    for (const auto& b : blocks) {
        double s = 0.0;
        for (double e : b.eig) {
            const double kappa = top - e - mu;
            if (!(kappa > 0)) throw InputError("comb_density: mu above the finite-volume bottom");
            s += 1.0 / std::expm1(beta * kappa);
        }
        acc += b.multiplicity * s;
        count += b.multiplicity * b.eig.size();
    }
    return acc / count;
}

double comb_solve_mu(int d, int n, double beta, double rho) {
    if (!(rho > 0)) throw InputError("density must be > 0");
    const auto blocks = comb_fiber_blocks(d, n);
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& b : blocks) top = std::max(top, b.eig.back());
    const double e0 = comb_norm(d) - top;
    // bisection in log(E0 - mu); density decreases in E0 - mu. Below ~1e-13 the gap drowns in rounding.
    double lo = std::log(1e-13), hi = std::log(e0 + 50.0 / beta);
    while (comb_density(blocks, d, beta, e0 - std::exp(hi)) > rho) hi += 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (comb_density(blocks, d, beta, e0 - std::exp(mid)) > rho) lo = mid;
        else hi = mid;
    }
    return e0 - std::exp(0.5 * (lo + hi));
}

DensityLimit density_limit(const CombRunConfig& cfg) {
    if (cfg.ns.size() < 3) throw InputError("density_limit needs at least three volumes");
    DensityLimit out;
    std::vector<double> h;
    for (int n : cfg.ns) {
        const auto blocks = comb_fiber_blocks(cfg.d, n);
        out.ns.push_back(n);
        out.values.push_back(comb_density(blocks, cfg.d, cfg.beta, schedule_mu(cfg, n)));
        h.push_back(1.0 / (2 * n + 1));
    }
    out.limit = richardson(h, out.values, std::min<int>(2, static_cast<int>(h.size()) - 2));
    return out;
}

}  // namespace combgas

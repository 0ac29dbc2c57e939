#include "combgas/secular.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "combgas/errors.hpp"
#include "combgas/spectral.hpp"

namespace combgas {

double SecularSystem::floor() const { return std::max(base->radius(), b_norm); }

SecularSystem make_secular_system(std::string name, BaseResolventPtr base, std::vector<Label> support,
                                  Eigen::MatrixXd D, Eigen::MatrixXd C, Graph B) {
    const int s = static_cast<int>(support.size());
    if (D.rows() != s || D.cols() != s) throw InputError("secular system: D must be support x support");
    if (s > 0 && (D - D.transpose()).cwiseAbs().maxCoeff() > 0) throw InputError("secular system: D not symmetric");
    if (C.rows() != s || C.cols() != static_cast<int>(B.vertex_count()))
        throw InputError("secular system: C must be support x |B|");
    SecularSystem sys;
    sys.name = std::move(name);
    sys.base = std::move(base);
    sys.support = std::move(support);
    sys.D = std::move(D);
    sys.C = std::move(C);
    sys.B = std::move(B);
    if (sys.B.vertex_count() > 0) {
        auto ev = dense_spectrum(sys.B);
        sys.b_norm = std::max(0.0, ev.back());
    }
    return sys;
}

SecularSystem system_from_blocks(std::string name, const Graph& base, const PerturbedGraph& pg) {
    std::vector<Label> support;
    for (int v : pg.blocks.support) support.push_back(base.label(v));
    return make_secular_system(std::move(name), std::make_shared<FiniteGraphResolvent>(base), std::move(support),
                               pg.blocks.D, pg.blocks.C, pg.blocks.B);
}

namespace {

Eigen::MatrixXd rb_matrix(const SecularSystem& s, double lam) {
    const int nb = static_cast<int>(s.B.vertex_count());
    if (nb == 0) return Eigen::MatrixXd(0, 0);
    Eigen::MatrixXd m = lam * Eigen::MatrixXd::Identity(nb, nb) - s.B.dense_adjacency();
    return m.inverse();
}

void check_lambda(const SecularSystem& s, double lam) {
    if (!(lam > s.floor())) throw InputError("secular: lambda " + std::to_string(lam) + " not above max(|A|,|B|)");
}

}  // namespace

Eigen::MatrixXd base_block(const SecularSystem& s, double lam) {
    check_lambda(s, lam);
    const int n = static_cast<int>(s.support.size());
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) r(i, j) = r(j, i) = s.base->entry(lam, s.support[i], s.support[j]);
    return r;
}

Eigen::MatrixXd m_block(const SecularSystem& s, double lam) {
    check_lambda(s, lam);
    Eigen::MatrixXd m = s.D;
    if (s.B.vertex_count() > 0) m += s.C * rb_matrix(s, lam) * s.C.transpose();
    return m;
}

Eigen::MatrixXd secular_matrix(const SecularSystem& s, double lam) { return m_block(s, lam) * base_block(s, lam); }

namespace {

struct SymEig {
    double value;
    Eigen::VectorXd z;  // eigenvector of S for that value
};

SymEig symmetric_top(const SecularSystem& s, double lam) {
    const Eigen::MatrixXd r = base_block(s, lam);
    const Eigen::MatrixXd m = m_block(s, lam);
    Eigen::LLT<Eigen::MatrixXd> llt(r);
    if (llt.info() != Eigen::Success) throw NumericError("secular: base resolvent block not positive definite");
    const Eigen::MatrixXd l = llt.matrixL();
    const Eigen::MatrixXd t = l.transpose() * m * l;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (t + t.transpose()));
    const int k = static_cast<int>(t.rows()) - 1;
    SymEig out;
    out.value = es.eigenvalues()(k);
    // S (L^{-t} y) = L^{-t} y
    out.z = l.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors().col(k));
    if (out.z.sum() < 0) out.z = -out.z;
    return out;
}

}  // namespace

double secular_pf_eigenvalue(const SecularSystem& s, double lam) {
    if (s.support.empty()) return 0.0;
    return symmetric_top(s, lam).value;
}

SecularSolution solve_secular(const SecularSystem& s, double bracket_hi, double tol) {
    SecularSolution sol;
    const double floor = s.floor();
    sol.lo = floor + 1e-9;
    sol.hi = bracket_hi;
    if (s.support.empty()) {
        sol.lambda0 = floor;
        return sol;
    }
    if (!(bracket_hi > sol.lo)) throw InputError("solve_secular: invalid bracket");
    auto eval = [&](double lam) {
        const double v = secular_pf_eigenvalue(s, lam);
        sol.trace.emplace_back(lam, v);
        return v;
    };
    const double f_hi = eval(bracket_hi);
    if (f_hi >= 1.0) throw InputError("solve_secular: PF(S) >= 1 at bracket_hi; bracket_hi is below |A_p|");
    const double f_lo = eval(sol.lo);
    if (f_lo < 1.0) {
        sol.lambda0 = floor;
        sol.status = SecularStatus::no_root_in_bracket;
    } else {
        double lo = sol.lo, hi = bracket_hi;
        while (hi - lo > tol * 1e-2 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi) {
            const double mid = 0.5 * (lo + hi);
            if (eval(mid) >= 1.0) lo = mid;
            else hi = mid;
        }
        sol.lambda0 = 0.5 * (lo + hi);
        sol.status = SecularStatus::root_found;
        const auto e = symmetric_top(s, sol.lambda0);
        sol.pf_z.assign(e.z.data(), e.z.data() + e.z.size());
    }
    // the PF eigenvalue of S must not increase with lambda
    auto sorted = sol.trace;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].second > sorted[i - 1].second + 1e-12 * std::max(1.0, std::fabs(sorted[i - 1].second)))
            throw NumericError("solve_secular: PF(S) increased along lambda at " + std::to_string(sorted[i].first));
    return sol;
}

HiddenVerdict hidden_spectrum_verdict(const SecularSolution& sol, double base_radius, double tol) {
    HiddenVerdict v;
    if (sol.status == SecularStatus::root_found && sol.lambda0 > base_radius + tol) {
        v.hidden = true;
        v.gap = sol.lambda0 - base_radius;
    }
    return v;
}

PerturbedVector perturbed_resolvent_apply(const SecularSystem& s, double lam,
                                          const std::vector<std::pair<Label, double>>& x,
                                          const std::vector<double>& y, const std::vector<Label>& window) {
    check_lambda(s, lam);
    const int nb = static_cast<int>(s.B.vertex_count());
    if (static_cast<int>(y.size()) != nb) throw InputError("perturbed resolvent: y has wrong size");
    const int ns = static_cast<int>(s.support.size());
    Eigen::VectorXd yv = Eigen::Map<const Eigen::VectorXd>(y.data(), nb);
    const Eigen::MatrixXd rb = rb_matrix(s, lam);

    // source on the base: x + C R_B y
    std::vector<std::pair<Label, double>> src = x;
    Eigen::VectorXd crby = Eigen::VectorXd::Zero(ns);
    if (nb > 0) crby = s.C * (rb * yv);
    for (int i = 0; i < ns; ++i)
        if (crby(i) != 0.0) src.emplace_back(s.support[i], crby(i));

    Eigen::VectorXd q = Eigen::VectorXd::Zero(ns);
    if (ns > 0) {
        const Eigen::MatrixXd m = m_block(s, lam);
        const Eigen::MatrixXd r = base_block(s, lam);
        const auto rs = s.base->apply(lam, src, s.support);
        const Eigen::VectorXd rhs = m * Eigen::Map<const Eigen::VectorXd>(rs.data(), ns);
        const Eigen::MatrixXd ims = Eigen::MatrixXd::Identity(ns, ns) - m * r;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(ims);
        const double smin = svd.singularValues()(ns - 1);
        if (smin < 1e-12 * std::max(1.0, svd.singularValues()(0)))
            throw NumericError("perturbed resolvent: I - S(lambda) is singular; lambda too close to |A_p|");
        q = ims.fullPivLu().solve(rhs);
    }
    auto full = src;
    for (int i = 0; i < ns; ++i)
        if (q(i) != 0.0) full.emplace_back(s.support[i], q(i));

    PerturbedVector out;
    std::vector<Label> want = window;
    want.insert(want.end(), s.support.begin(), s.support.end());
    const auto u = s.base->apply(lam, full, want);
    out.base.assign(u.begin(), u.begin() + window.size());
    if (nb > 0) {
        Eigen::VectorXd us = Eigen::Map<const Eigen::VectorXd>(u.data() + window.size(), ns);
        Eigen::VectorXd w = rb * (yv + s.C.transpose() * us);
        out.b.assign(w.data(), w.data() + nb);
    }
    return out;
}

PerturbedVector reconstruct_pf(const SecularSystem& s, const SecularSolution& sol, const std::vector<Label>& window) {
    if (sol.status != SecularStatus::root_found) throw InputError("reconstruct_pf: no secular root");
    const double lam = sol.lambda0;
    const int ns = static_cast<int>(s.support.size());
    std::vector<std::pair<Label, double>> z;
    for (int i = 0; i < ns; ++i) z.emplace_back(s.support[i], sol.pf_z[i]);
    PerturbedVector out;
    out.base = s.base->apply(lam, z, window);
    const int nb = static_cast<int>(s.B.vertex_count());
    if (nb > 0) {
        const auto rz = s.base->apply(lam, z, s.support);
        Eigen::VectorXd w = rb_matrix(s, lam) * (s.C.transpose() * Eigen::Map<const Eigen::VectorXd>(rz.data(), ns));
        out.b.assign(w.data(), w.data() + nb);
    }
    return out;
}

}  // namespace combgas

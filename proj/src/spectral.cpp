#include "combgas/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "combgas/errors.hpp"
#include "combgas/simd.hpp"

namespace combgas {

std::vector<double> dense_spectrum(const Graph& g, int dense_cap) {
    if (static_cast<int>(g.vertex_count()) > dense_cap)
        throw InputError("dense spectrum: " + std::to_string(g.vertex_count()) + " vertices exceed cap " +
                         std::to_string(dense_cap));
    if (g.vertex_count() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.dense_adjacency(), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> laplacian_spectrum(const Graph& g, int dense_cap) {
    if (static_cast<int>(g.vertex_count()) > dense_cap) throw InputError("laplacian spectrum: cap exceeded");
    if (g.vertex_count() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.dense_laplacian(), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return {};
    if (static_cast<int>(off.size()) != n - 1) throw InputError("tridiagonal: off-diagonal size mismatch");
    if (n == 1) return {diag[0]};
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), n);
    Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(off.data(), n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

int default_anchor(const Graph& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& l = g.label(static_cast<int>(v));
        if (std::all_of(l.begin(), l.end(), [](int x) { return x == 0; })) return static_cast<int>(v);
    }
    return 0;
}

namespace {

double true_residual(const Graph& g, const std::vector<double>& v, double lam) {
    const std::size_t n = v.size();
    std::vector<double> av(n);
    g.apply(v.data(), av.data());
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += (av[i] - lam * v[i]) * (av[i] - lam * v[i]);
    return std::sqrt(r / simd::dot(v.data(), v.data(), n));
}

// Shifted power iteration on A + s I; slow but simple. Used when Lanczos stalls.
SpectralResult power_fallback(const Graph& g, std::vector<double> v, double tol, int budget) {
    const std::size_t n = g.vertex_count();
    const double shift = g.max_degree();
    std::vector<double> w(n);
    SpectralResult r;
    double lam = 0.0;
    for (int it = 0; it < budget; ++it) {
        g.apply(v.data(), w.data());
        lam = simd::dot(v.data(), w.data(), n) / simd::dot(v.data(), v.data(), n);
        simd::axpy(shift, v.data(), w.data(), n);
        const double nrm = std::sqrt(simd::dot(w.data(), w.data(), n));
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nrm;
        r.iterations = it + 1;
        if (it % 50 == 49 && true_residual(g, v, lam) <= tol * std::max(1.0, std::fabs(lam))) break;
    }
    g.apply(v.data(), w.data());
    r.top_eigenvalue = simd::dot(v.data(), w.data(), n);
    r.residual = true_residual(g, v, r.top_eigenvalue);
    r.pf_vector = std::move(v);
    return r;
}

}  // namespace

SpectralResult lanczos_top(const Graph& g, double tol, int max_krylov, int max_restarts) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw InputError("eigenpair of an empty graph");
    SpectralResult out;
    if (n == 1) {
        out.top_eigenvalue = 0.0;
        out.pf_vector = {1.0};
        return out;
    }
    const int kmax = static_cast<int>(std::min<std::size_t>(
        n, static_cast<std::size_t>(std::max<std::size_t>(30, std::min<std::size_t>(max_krylov, 10000000 / n)))));

    std::vector<double> start(n, 1.0);
    std::vector<double> V;  // column-major n x kmax
    V.reserve(n * kmax);
    std::vector<double> w(n);
    int total_iter = 0;

    for (int restart = 0; restart <= max_restarts; ++restart) {
        V.clear();
        double nrm = std::sqrt(simd::dot(start.data(), start.data(), n));
        for (auto& x : start) x /= nrm;
        V.insert(V.end(), start.begin(), start.end());
        std::vector<double> alpha, beta;
        Eigen::VectorXd ritz;
        double theta = 0.0;
        bool breakdown = false;

        for (int j = 0; j < kmax; ++j) {
            const double* vj = V.data() + j * n;
            g.apply(vj, w.data());
            ++total_iter;
            alpha.push_back(simd::dot(vj, w.data(), n));
            // full reorthogonalization, two passes
            for (int pass = 0; pass < 2; ++pass)
                for (int k = 0; k <= j; ++k) {
                    const double* vk = V.data() + k * n;
                    simd::axpy(-simd::dot(vk, w.data(), n), vk, w.data(), n);
                }
            const double b = std::sqrt(simd::dot(w.data(), w.data(), n));

            const int m = j + 1;
            const bool check = (m % 5 == 0) || m == kmax || b < 1e-12;
            if (check) {
                Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
                if (m == 1) {
                    ritz = Eigen::VectorXd::Ones(1);
                    theta = d(0);
                } else {
                    Eigen::VectorXd e = Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1);
                    es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
                    theta = es.eigenvalues()(m - 1);
                    ritz = es.eigenvectors().col(m - 1);
                }
                const double est = b * std::fabs(ritz(m - 1));
                if (est <= tol * std::max(1.0, std::fabs(theta)) * 0.1 || b < 1e-12 || m == kmax) {
                    breakdown = b < 1e-12;
                    break;
                }
            }
            beta.push_back(b);
            for (std::size_t i = 0; i < n; ++i) w[i] /= b;
            V.insert(V.end(), w.begin(), w.end());
        }

        const int m = static_cast<int>(ritz.size());
        std::vector<double> y(n, 0.0);
        for (int k = 0; k < m; ++k) simd::axpy(ritz(k), V.data() + k * n, y.data(), n);
        nrm = std::sqrt(simd::dot(y.data(), y.data(), n));
        for (auto& x : y) x /= nrm;
        const double res = true_residual(g, y, theta);
        out.top_eigenvalue = theta;
        out.residual = res;
        out.iterations = total_iter;
        out.pf_vector = y;
        if (res <= tol * std::max(1.0, std::fabs(theta))) break;
        if (breakdown && restart > 2) break;
        start = std::move(y);
    }
    if (out.residual > tol * std::max(1.0, std::fabs(out.top_eigenvalue))) {
        auto p = power_fallback(g, out.pf_vector, tol, 200000);
        p.iterations += total_iter;
        if (p.residual < out.residual) out = std::move(p);
    }
    if (out.residual > tol * std::max(1.0, std::fabs(out.top_eigenvalue)))
        throw NumericError("top eigenpair did not converge, last residual " + std::to_string(out.residual));
    // PF sign convention
    double s = std::accumulate(out.pf_vector.begin(), out.pf_vector.end(), 0.0);
    if (s < 0)
        for (auto& x : out.pf_vector) x = -x;
    return out;
}

SpectralResult top_eigenpair(const Graph& g, double tol, int anchor) {
    if (g.vertex_count() == 0) throw InputError("top_eigenpair: empty graph");
    if (!g.connected()) throw InputError("top_eigenpair: graph is disconnected");
    SpectralResult r = lanczos_top(g, tol);
    const int a = anchor < 0 ? default_anchor(g) : anchor;
    const double va = r.pf_vector[a];
    if (!(va > 0)) throw NumericError("PF vector vanishes at the anchor");
    for (auto& x : r.pf_vector) x /= va;
    return r;
}

}  // namespace combgas

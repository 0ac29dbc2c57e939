#include "combgas/resolvent.hpp"

#include <cmath>

#include "combgas/errors.hpp"
#include "combgas/simd.hpp"
#include "combgas/spectral.hpp"

namespace combgas {

double chain_theta(double lam) {
    if (!(lam > 2.0)) throw InputError("chain kernel needs lambda > 2");
    // log form stays accurate near lam = 2+
    const double h = lam / 2.0;
    return std::log(h + std::sqrt((h - 1.0) * (h + 1.0)));
}

double kernel_half_line(double lam) {
    if (!(lam > 2.0)) throw InputError("half-line kernel needs lambda > 2");
    return 2.0 / (lam + std::sqrt(lam * lam - 4.0));
}

double kernel_line(double lam, long j) {
    const double th = chain_theta(lam);
    return std::exp(-std::fabs(static_cast<double>(j)) * th) / std::sqrt((lam - 2.0) * (lam + 2.0));
}

double kernel_box(double lam) {
    if (!(lam > 2.0 * std::sqrt(2.0))) throw InputError("box kernel needs lambda > 2 sqrt 2");
    return 2.0 / (lam + std::sqrt(lam * lam - 8.0));
}

namespace {

// Thomas algorithm on (lam - A_path) x = e_j, returns x_i; sites 1..N
double path_entry_solve(double lam, int N, int i, int j) {
    std::vector<double> c(N + 1), d(N + 1);
    // diagonal lam, off-diagonal -1
    double denom = lam;
    c[1] = -1.0 / denom;
    d[1] = (j == 1 ? 1.0 : 0.0) / denom;
    for (int k = 2; k <= N; ++k) {
        denom = lam + c[k - 1];
        if (std::fabs(denom) < 1e-300) throw NumericError("path resolvent: singular pivot");
        c[k] = -1.0 / denom;
        d[k] = ((k == j ? 1.0 : 0.0) + d[k - 1]) / denom;
    }
    std::vector<double> x(N + 2, 0.0);
    x[N] = d[N];
    for (int k = N - 1; k >= 1; --k) x[k] = d[k] - c[k] * x[k + 1];
    return x[i];
}

}  // namespace

double path_resolvent_entry(double lam, int N, int i, int j) {
    if (N < 1 || i < 1 || j < 1 || i > N || j > N) throw InputError("path resolvent index out of range");
    if (lam > 2.0) {
        const double th = chain_theta(lam);
        const int lo = std::min(i, j), hi = std::max(i, j);
        const double a = -std::expm1(-2.0 * lo * th);
        const double b = -std::expm1(-2.0 * (N + 1 - hi) * th);
        const double c = -std::expm1(-2.0 * (N + 1) * th);
        return std::exp(-(hi - lo) * th) * a * b / (std::sqrt((lam - 2.0) * (lam + 2.0)) * c);
    }
    if (!(lam > 2.0 * std::cos(M_PI / (N + 1))))
        throw InputError("lambda inside the finite chain spectrum");
    return path_entry_solve(lam, N, i, j);
}

double kernel_finite_chain(double lam, int n, int j) {
    if (n < 0 || std::abs(j) > n) throw InputError("finite chain kernel: |j| > n");
    return path_resolvent_entry(lam, 2 * n + 1, n + 1, n + 1 + j);
}

double half_line_entry(double lam, long i, long j) {
    if (i < 0 || j < 0) throw InputError("half line index must be >= 0");
    const double th = chain_theta(lam);
    const double s = std::sqrt((lam - 2.0) * (lam + 2.0));
    const double d = std::fabs(static_cast<double>(i - j));
    // e^{-|i-j| th} (1 - e^{-2 (min+1) th})
    return std::exp(-d * th) * (-std::expm1(-2.0 * (std::min(i, j) + 1) * th)) / s;
}

TransferMatrix transfer_matrix(double lam) {
    TransferMatrix t;
    t.lambda = lam;
    t.m << -1.0, lam, -lam, lam * lam - 1.0;
    if (lam > 2.0) {
        const double r = lam * std::sqrt(lam * lam - 4.0);
        t.mu_plus = (lam * lam - 2.0 + r) / 2.0;
        t.mu_minus = (lam * lam - 2.0 - r) / 2.0;
        const double s = std::sqrt(lam * lam - 4.0);
        t.v_plus << 2.0, lam + s;
        t.v_minus << 2.0, lam - s;
    } else {
        t.mu_plus = t.mu_minus = std::nan("");
        t.v_plus.setConstant(std::nan(""));
        t.v_minus.setConstant(std::nan(""));
    }
    return t;
}

std::array<double, 2> transfer_step(double lam, const std::array<double, 2>& s) {
    return {-s[0] + lam * s[1], -lam * s[0] + (lam * lam - 1.0) * s[1]};
}

std::vector<double> BaseResolvent::apply(double lam, const std::vector<std::pair<Label, double>>& x,
                                         const std::vector<Label>& window) const {
    std::vector<double> out(window.size(), 0.0);
    for (std::size_t w = 0; w < window.size(); ++w)
        for (const auto& [l, v] : x)
            if (v != 0.0) out[w] += entry(lam, window[w], l) * v;
    return out;
}

namespace {
void check_arity(const Label& a, const Label& b, std::size_t n, const char* what) {
    if (a.size() != n || b.size() != n) throw InputError(std::string(what) + ": wrong label arity");
}
}  // namespace

double LineResolvent::entry(double lam, const Label& a, const Label& b) const {
    check_arity(a, b, 1, "line");
    return kernel_line(lam, static_cast<long>(a[0]) - b[0]);
}

double HalfLineResolvent::entry(double lam, const Label& a, const Label& b) const {
    check_arity(a, b, 1, "half line");
    return half_line_entry(lam, a[0], b[0]);
}

double BoxResolvent::entry(double lam, const Label& a, const Label& b) const {
    check_arity(a, b, 2, "box");
    if (!(lam > radius())) throw InputError("box resolvent needs lambda > 2 sqrt 2");
    const double r2 = std::sqrt(2.0);
    auto weight = [&](int t) { return t % 2 == 0 ? 1.0 : 1.0 / r2; };
    double v = weight(a[0]) * weight(b[0]) / r2 * half_line_entry(lam / r2, a[0], b[0]);
    if (a[0] == b[0] && a[0] % 2 == 1) v += (a[1] == b[1] ? 0.5 : -0.5) / lam;
    return v;
}

double LadderResolvent::entry(double lam, const Label& a, const Label& b) const {
    check_arity(a, b, 2, "ladder");
    if (!(lam > 3.0)) throw InputError("ladder resolvent needs lambda > 3");
    const long d = static_cast<long>(a[0]) - b[0];
    const double p = kernel_line(lam - 1.0, d), m = kernel_line(lam + 1.0, d);
    return a[1] == b[1] ? 0.5 * (p + m) : 0.5 * (p - m);
}

double CopiesResolvent::entry(double lam, const Label& a, const Label& b) const {
    if (a.empty() || b.empty()) throw InputError("copies resolvent: empty label");
    if (a[0] != b[0]) return 0.0;
    if (a[0] < 0 || a[0] >= copies_) throw InputError("copies resolvent: copy index out of range");
    return inner_->entry(lam, Label(a.begin() + 1, a.end()), Label(b.begin() + 1, b.end()));
}

FiniteGraphResolvent::FiniteGraphResolvent(Graph g) : g_(std::move(g)) {
    radius_ = g_.vertex_count() == 0 ? 0.0 : lanczos_top(g_, 1e-12).top_eigenvalue;
}

const std::vector<double>& FiniteGraphResolvent::column(double lam, int b) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (lam != cached_lam_) {
        cache_.clear();
        cached_lam_ = lam;
    }
    auto it = cache_.find(b);
    if (it != cache_.end()) return it->second;
    std::vector<double> rhs(g_.vertex_count(), 0.0);
    rhs[b] = 1.0;
    auto res = resolvent_solve(g_, lam, rhs, 1e-13, 1e-8, radius_);
    return cache_.emplace(b, std::move(res.x)).first->second;
}

double FiniteGraphResolvent::entry(double lam, const Label& a, const Label& b) const {
    return column(lam, g_.id(b))[g_.id(a)];
}

std::vector<double> FiniteGraphResolvent::apply(double lam, const std::vector<std::pair<Label, double>>& x,
                                                const std::vector<Label>& window) const {
    std::vector<double> rhs(g_.vertex_count(), 0.0);
    for (const auto& [l, v] : x) rhs[g_.id(l)] += v;
    auto res = resolvent_solve(g_, lam, rhs, 1e-13, 1e-8, radius_);
    std::vector<double> out;
    out.reserve(window.size());
    for (const auto& w : window) out.push_back(res.x[g_.id(w)]);
    return out;
}

SolveResult resolvent_solve(const Graph& g, double lam, const std::vector<double>& rhs, double tol,
                            double margin, double top_hint) {
    const std::size_t n = g.vertex_count();
    if (rhs.size() != n) throw InputError("resolvent_solve: rhs size mismatch");
    double top = top_hint;
    if (top < 0.0) top = lam > g.max_degree() + margin ? g.max_degree() : lanczos_top(g, 1e-12).top_eigenvalue;
    if (!(lam > top + margin))
        throw InputError("resolvent_solve: lambda not above the spectrum (top " + std::to_string(top) + ")");

    SolveResult out;
    out.x.assign(n, 0.0);
    const double bnorm = std::sqrt(simd::dot(rhs.data(), rhs.data(), n));
    if (bnorm == 0.0) return out;

    std::vector<double> r = rhs, p = rhs, ap(n);
    double rr = bnorm * bnorm;
    const int max_iter = static_cast<int>(10 * n + 1000);
    for (int it = 0; it < max_iter; ++it) {
        g.apply(p.data(), ap.data());
        for (std::size_t i = 0; i < n; ++i) ap[i] = lam * p[i] - ap[i];
        const double alpha = rr / simd::dot(p.data(), ap.data(), n);
        simd::axpy(alpha, p.data(), out.x.data(), n);
        simd::axpy(-alpha, ap.data(), r.data(), n);
        const double rr_new = simd::dot(r.data(), r.data(), n);
        out.iterations = it + 1;
        if (std::sqrt(rr_new) <= tol * bnorm) { rr = rr_new; break; }
        const double beta = rr_new / rr;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
        rr = rr_new;
    }
    // true residual
    g.apply(out.x.data(), ap.data());
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = lam * out.x[i] - ap[i] - rhs[i];
        res += e * e;
    }
    out.residual = std::sqrt(res) / bnorm;
    if (out.residual > std::max(1e-10, 100 * tol))
        throw NumericError("resolvent_solve: CG did not converge, residual " + std::to_string(out.residual));
    return out;
}

}  // namespace combgas

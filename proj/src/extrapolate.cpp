#include "combgas/extrapolate.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "combgas/errors.hpp"

namespace combgas {

Extrapolation aitken(const std::vector<double>& seq) {
    if (seq.size() < 3) throw InputError("aitken needs at least three terms");
    const std::size_t k = seq.size();
    const double x0 = seq[k - 3], x1 = seq[k - 2], x2 = seq[k - 1];
    const double d1 = x1 - x0, d2 = x2 - x1;
    const double den = d2 - d1;
    Extrapolation e;
    // no geometric contraction visible: keep the last term, report the last step as uncertainty
    if (den == 0.0 || std::fabs(d2) >= std::fabs(d1) || d1 * d2 < 0) {
        e.value = x2;
        e.uncertainty = std::fabs(d2);
        return e;
    }
    const double corr = -d2 * d2 / den;
    e.value = x2 + corr;
    e.uncertainty = std::fabs(corr);
    return e;
}

namespace {
double poly_fit_constant(const std::vector<double>& h, const std::vector<double>& f, int order,
                         std::size_t first) {
    const int m = static_cast<int>(h.size() - first);
    Eigen::MatrixXd a(m, order + 1);
    Eigen::VectorXd b(m);
    for (int i = 0; i < m; ++i) {
        double p = 1.0;
        for (int k = 0; k <= order; ++k) {
            a(i, k) = p;
            p *= h[first + i];
        }
        b(i) = f[first + i];
    }
    return a.colPivHouseholderQr().solve(b)(0);
}
}  // namespace

Extrapolation richardson(const std::vector<double>& h, const std::vector<double>& f, int order) {
    if (h.size() != f.size()) throw InputError("richardson: size mismatch");
    if (static_cast<int>(h.size()) < order + 2) throw InputError("richardson: need order + 2 points");
    Extrapolation e;
    // use the last order+1 points for the primary estimate
    e.value = poly_fit_constant(h, f, order, h.size() - (order + 1));
    // comparison: same order one window earlier, and one order lower on the tail
    const double earlier = poly_fit_constant(std::vector<double>(h.begin(), h.end() - 1),
                                             std::vector<double>(f.begin(), f.end() - 1), order,
                                             h.size() - 1 - (order + 1));
    e.uncertainty = std::fabs(e.value - earlier);
    return e;
}

PowerFit fit_power(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw InputError("fit_power: need two or more points");
    const int m = static_cast<int>(x.size());
    Eigen::MatrixXd a(m, 2);
    Eigen::VectorXd b(m);
    for (int i = 0; i < m; ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw InputError("fit_power: nonpositive data");
        a(i, 0) = 1.0;
        a(i, 1) = std::log(x[i]);
        b(i) = std::log(y[i]);
    }
    Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
    PowerFit p;
    p.prefactor = std::exp(c(0));
    p.exponent = c(1);
    p.rms_residual = std::sqrt((a * c - b).squaredNorm() / m);
    return p;
}

}  // namespace combgas

#pragma once
#include <vector>

namespace combgas {

struct Extrapolation {
    double value = 0.0;
    double uncertainty = 0.0;
};

// Aitken delta-squared on the last three entries; uncertainty = |applied correction|.
Extrapolation aitken(const std::vector<double>& seq);

// Fit f(h) = L + a1 h + ... + ak h^k by least squares (k = order) and return L.
// Uncertainty = |L - L'| where L' is the same fit with one order less (or one point less).
Extrapolation richardson(const std::vector<double>& h, const std::vector<double>& f, int order = 1);

struct PowerFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double rms_residual = 0.0;  // in log space
};
// least squares of log y = log C + p log x; y must be positive
PowerFit fit_power(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace combgas

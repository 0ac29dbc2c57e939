#pragma once
// Secular equation for A_p = (A + D, C; C^t, B): 1 is an eigenvalue of
// S(lam) = (D R_A + C R_B C^t R_A) on the support  <=>  lam is an eigenvalue of A_p above the base spectra.

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "combgas/builders.hpp"
#include "combgas/resolvent.hpp"

namespace combgas {

struct SecularSystem {
    std::string name;
    BaseResolventPtr base;
    std::vector<Label> support;
    Eigen::MatrixXd D;  // support x support
    Eigen::MatrixXd C;  // support x |B|
    Graph B;
    double b_norm = 0.0;  // largest eigenvalue of B (0 when B is empty)

    double floor() const;  // max(base radius, b_norm)
};

SecularSystem make_secular_system(std::string name, BaseResolventPtr base, std::vector<Label> support,
                                  Eigen::MatrixXd D, Eigen::MatrixXd C, Graph B);

// Finite base graph plus the blocks reported by apply_perturbation.
SecularSystem system_from_blocks(std::string name, const Graph& base, const PerturbedGraph& pg);

Eigen::MatrixXd secular_matrix(const SecularSystem& s, double lam);
Eigen::MatrixXd base_block(const SecularSystem& s, double lam);  // R_A on the support
Eigen::MatrixXd m_block(const SecularSystem& s, double lam);     // D + C R_B C^t

// Largest eigenvalue of S(lam). S is similar to L^t M L with R_A = L L^t, so this is real
// and nonincreasing in lam even when D has negative entries.
double secular_pf_eigenvalue(const SecularSystem& s, double lam);

enum class SecularStatus { root_found, no_root_in_bracket };

struct SecularSolution {
    double lambda0 = 0.0;
    std::vector<double> pf_z;
    double lo = 0.0, hi = 0.0;
    SecularStatus status = SecularStatus::no_root_in_bracket;
    std::vector<std::pair<double, double>> trace;  // (lam, PF eigenvalue of S)
};

SecularSolution solve_secular(const SecularSystem& s, double bracket_hi, double tol = 1e-10);

struct HiddenVerdict {
    bool hidden = false;
    double gap = 0.0;
};
HiddenVerdict hidden_spectrum_verdict(const SecularSolution& sol, double base_radius, double tol = 1e-9);

struct PerturbedVector {
    std::vector<double> base;  // on the requested window
    std::vector<double> b;     // on B
};

// R_{A_p}(lam) applied to (x, y); x finitely supported on base labels, y on B.
PerturbedVector perturbed_resolvent_apply(const SecularSystem& s, double lam,
                                          const std::vector<std::pair<Label, double>>& x,
                                          const std::vector<double>& y, const std::vector<Label>& window);

// Eigenvector of A_p at lambda0 from the secular solution: x = R_A z, y = R_B C^t R_A z.
PerturbedVector reconstruct_pf(const SecularSystem& s, const SecularSolution& sol, const std::vector<Label>& window);

}  // namespace combgas

#pragma once
// Resolvents R(lam) = (lam - A)^{-1}: closed-form chain kernels, the 2x2 transfer matrix,
// base-resolvent oracles on labelled vertices, and a CG solver for finite graphs.

#include <Eigen/Dense>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "combgas/graph.hpp"

namespace combgas {

// theta with 2 cosh(theta) = lam, lam > 2
double chain_theta(double lam);

double kernel_half_line(double lam);         // <d0, R_N d0>
double kernel_line(double lam, long j);       // <d0, R_Z dj>
double kernel_box(double lam);               // <root, R_box root>
double kernel_finite_chain(double lam, int n, int j);  // <d0, R_[-n,n] dj>

// Path on sites 1..N, entry (i, j). Hyperbolic closed form for lam > 2, tridiagonal solve otherwise.
double path_resolvent_entry(double lam, int N, int i, int j);
// Half line N = {0, 1, ...}, entry (i, j).
double half_line_entry(double lam, long i, long j);

struct TransferMatrix {
    double lambda;
    Eigen::Matrix2d m;
    double mu_plus, mu_minus;
    Eigen::Vector2d v_plus, v_minus;
};
TransferMatrix transfer_matrix(double lam);  // lam > 2 for the eigen data
std::array<double, 2> transfer_step(double lam, const std::array<double, 2>& state);

// Resolvent of an infinite or finite base graph, addressed by vertex labels.
class BaseResolvent {
public:
    virtual ~BaseResolvent() = default;
    virtual double radius() const = 0;
    virtual double entry(double lam, const Label& a, const Label& b) const = 0;
    virtual std::string name() const = 0;
    // (R x)(w) for w in window; x finitely supported. Default goes through entry().
    virtual std::vector<double> apply(double lam, const std::vector<std::pair<Label, double>>& x,
                                      const std::vector<Label>& window) const;
};

using BaseResolventPtr = std::shared_ptr<const BaseResolvent>;

class LineResolvent : public BaseResolvent {  // labels (j)
public:
    double radius() const override { return 2.0; }
    double entry(double lam, const Label& a, const Label& b) const override;
    std::string name() const override { return "line"; }
};

class HalfLineResolvent : public BaseResolvent {  // labels (t), t >= 0
public:
    double radius() const override { return 2.0; }
    double entry(double lam, const Label& a, const Label& b) const override;
    std::string name() const override { return "half_line"; }
};

// Box graph, labels (t, side). The symmetric sector is a half line with hopping sqrt2,
// antisymmetric pair vectors are eigenvectors with eigenvalue 0.
class BoxResolvent : public BaseResolvent {
public:
    double radius() const override { return 2.0 * std::sqrt(2.0); }
    double entry(double lam, const Label& a, const Label& b) const override;
    std::string name() const override { return "box"; }
};

// Z x K2, labels (j, s): R = (R_Z(lam-1) +- R_Z(lam+1)) / 2.
class LadderResolvent : public BaseResolvent {
public:
    double radius() const override { return 3.0; }
    double entry(double lam, const Label& a, const Label& b) const override;
    std::string name() const override { return "ladder"; }
};

// Disjoint copies of an inner base; labels (copy, inner label...).
class CopiesResolvent : public BaseResolvent {
public:
    CopiesResolvent(BaseResolventPtr inner, int copies) : inner_(std::move(inner)), copies_(copies) {}
    double radius() const override { return inner_->radius(); }
    double entry(double lam, const Label& a, const Label& b) const override;
    std::string name() const override { return std::to_string(copies_) + "x" + inner_->name(); }

private:
    BaseResolventPtr inner_;
    int copies_;
};

// Finite graph; columns obtained by conjugate gradients and cached per lam.
class FiniteGraphResolvent : public BaseResolvent {
public:
    explicit FiniteGraphResolvent(Graph g);
    double radius() const override { return radius_; }
    double entry(double lam, const Label& a, const Label& b) const override;
    std::string name() const override { return "finite"; }
    std::vector<double> apply(double lam, const std::vector<std::pair<Label, double>>& x,
                              const std::vector<Label>& window) const override;
    const Graph& graph() const { return g_; }

private:
    const std::vector<double>& column(double lam, int b) const;
    Graph g_;
    double radius_;
    mutable std::mutex mu_;
    mutable double cached_lam_ = -1.0;
    mutable std::map<int, std::vector<double>> cache_;
};

struct SolveResult {
    std::vector<double> x;
    double residual = 0.0;  // relative
    int iterations = 0;
};

// (lam I - A) x = rhs by conjugate gradients; lam must exceed the top eigenvalue by margin.
// top_hint < 0 means: compute it.
SolveResult resolvent_solve(const Graph& g, double lam, const std::vector<double>& rhs,
                            double tol = 1e-12, double margin = 1e-8, double top_hint = -1.0);

}  // namespace combgas

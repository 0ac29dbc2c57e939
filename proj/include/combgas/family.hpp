#pragma once
// Exhaustions n -> Lambda_n of infinite graphs, with canonical coordinate labels.

#include <map>
#include <string>
#include <vector>

#include "combgas/builders.hpp"
#include "combgas/catalog.hpp"
#include "combgas/extrapolate.hpp"
#include "combgas/rational.hpp"

namespace combgas {

enum class FamilyKind { lattice_box, chain, comb, fibers, catalog };

struct GraphFamily {
    FamilyKind kind = FamilyKind::chain;
    int d = 1;
    Boundary boundary = Boundary::free;
    std::string catalog_name;
    Params params;
    Perturbation perturbation;  // extra coordinate edits applied to every volume

    Graph build(int n) const;
    std::size_t volume(int n) const;
    // the all-zeros label of the family's coordinate system
    Label anchor_label() const;
    // Lambda_n is a subgraph of Lambda_{n+1} under the labels
    bool nested() const;
    std::string describe() const;
};

GraphFamily family_chain();
GraphFamily family_lattice(int d, Boundary b);
// Z^d comb with chain fibers rooted at 0: box [-n,n]^d (free or torus) times fiber [-n,n]
GraphFamily family_comb(int d, Boundary b);
// the same vertex set with the backbone removed: disjoint chains
GraphFamily family_fibers(int d, Boundary b);
GraphFamily family_catalog(const std::string& name, const Params& p);

// |boundary of Lambda_n| / |Lambda_n|, boundary = vertices with a neighbour outside Lambda_n
Rational folner_ratio(const GraphFamily& f, int n);

struct PFLimitReport {
    std::vector<int> ns;
    std::vector<double> norms;  // ||A_n||, nondecreasing
    Extrapolation extrapolated_norm;
    std::map<Label, double> pf_pointwise;  // largest volume, anchor-normalized, labels within the window
};
// n = 1..n_max. Norms that converge exponentially saturate at rounding level, so ties within
// 1e-12 relative are accepted; a real decrease throws NumericError.
PFLimitReport norm_sequence(const GraphFamily& f, int n_max, int window = 2, double tol = 1e-10);

}  // namespace combgas

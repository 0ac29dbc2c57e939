#pragma once
#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "combgas/graph.hpp"
#include "combgas/rational.hpp"

namespace combgas {

enum class Boundary { free, periodic };

Graph build_lattice_box(int d, int n, Boundary boundary);
Graph build_chain(int n);                // labels (j), j in [-n, n]
Graph build_half_chain(int m);           // labels (t), t in [0, m]
Graph build_cycle(int m);                // labels (k), k in [0, m)
Graph build_box_chain(int levels);       // truncated box graph, labels (t, side), t in [0, levels]
Graph build_ladder(int n);               // labels (j, s), j in [-n, n], s in {0, 1}
// Disjoint copies of g; copy c gets labels (c, label...).
Graph disjoint_copies(const Graph& g, int copies);

// Vertex set base x fiber, labels concatenated (base..., fiber...).
// g = g' and h ~ h', or h = h' = root and g ~ g'.
Graph comb_product(const Graph& base, const Graph& fiber, int root);

// marks attached vertices in an assembled graph: label (kAttachedTag, b-label...)
inline constexpr int kAttachedTag = -999999;

struct AddedEdge {
    Label u, v;
    int multiplicity = 1;
};

struct Attachment {
    Graph b;
    std::vector<std::pair<Label, Label>> links;  // (vertex of b, vertex of base)
};

struct Perturbation {
    std::vector<std::pair<Label, Label>> removed_edges;
    std::vector<AddedEdge> added_edges;
    std::vector<Attachment> attached;

    bool empty() const { return removed_edges.empty() && added_edges.empty() && attached.empty(); }
};

// The (D, C, B) split of the perturbed adjacency (A + D, C; C^t, B).
struct PerturbationBlocks {
    std::vector<int> support;  // base vertex ids, ascending
    Eigen::MatrixXd D;         // support x support
    Eigen::MatrixXd C;         // support x |B|
    Graph B;
    std::vector<int> b_ids;  // ids of B's vertices inside the assembled graph
};

struct PerturbedGraph {
    Graph graph;
    PerturbationBlocks blocks;
};

PerturbedGraph apply_perturbation(const Graph& g, const Perturbation& p);

// |(E(x) sym-diff E(y)) restricted to window| / |window|; window given by labels present in both.
// Parallel-edge multiplicities count as distinct edges.
Rational symdiff_density(const Graph& x, const Graph& y, const std::vector<Label>& window);

}  // namespace combgas

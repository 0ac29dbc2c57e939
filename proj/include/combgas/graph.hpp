#pragma once
// Immutable undirected graph with coordinate labels.
// Edges carry an integer multiplicity so that k parallel links (H-graph, modified ladder)
// stay representable; every builder that produces a simple graph uses multiplicity 1.

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace combgas {

using Label = std::vector<int>;

std::string label_string(const Label& l);

class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return labels_.size(); }
    const Label& label(int v) const { return labels_[v]; }
    const std::vector<Label>& labels() const { return labels_; }
    std::optional<int> find(const Label& l) const;
    int id(const Label& l) const;  // throws InputError when absent

    std::span<const int> neighbors(int v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::span<const double> weights(int v) const {
        return {values_.data() + offsets_[v], values_.data() + offsets_[v + 1]};
    }
    int degree(int v) const;  // with multiplicity
    int max_degree() const;
    int multiplicity(int u, int v) const;
    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }
    std::size_t edge_count() const;  // with multiplicity
    std::vector<std::pair<int, int>> edges() const;  // u < v, each distinct pair once
    bool is_simple() const;
    bool connected() const;

    // CSR view used by sparse matvec
    const std::vector<int>& offsets() const { return offsets_; }
    const std::vector<int>& targets() const { return targets_; }
    const std::vector<double>& values() const { return values_; }
    void apply(const double* x, double* y) const;

    Eigen::MatrixXd dense_adjacency() const;
    Eigen::MatrixXd dense_laplacian() const;

private:
    friend class GraphBuilder;
    std::vector<Label> labels_;
    std::map<Label, int> index_;
    std::vector<int> offsets_{0};
    std::vector<int> targets_;
    std::vector<double> values_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int degree_cap = 64) : degree_cap_(degree_cap) {}
    // starts from an existing graph, keeping its ids
    explicit GraphBuilder(const Graph& g, int degree_cap = 64);

    int add_vertex(const Label& l);  // returns id; duplicate labels rejected
    int vertex(const Label& l) const;
    std::optional<int> find(const Label& l) const;
    std::size_t vertex_count() const { return labels_.size(); }

    void add_edge(int u, int v, int multiplicity = 1);  // accumulates
    void remove_edge(int u, int v);                      // removes all parallel copies
    int multiplicity(int u, int v) const;

    Graph build() const;

private:
    int degree_cap_;
    std::vector<Label> labels_;
    std::map<Label, int> index_;
    std::vector<std::map<int, int>> adj_;
};

}  // namespace combgas

#include "combgas/graph.hpp"

#include <algorithm>
#include <sstream>

#include "combgas/errors.hpp"
#include "combgas/simd.hpp"

namespace combgas {

std::string label_string(const Label& l) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ')';
    return os.str();
}

std::optional<int> Graph::find(const Label& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::id(const Label& l) const {
    auto v = find(l);
    if (!v) throw InputError("no vertex with label " + label_string(l));
    return *v;
}

int Graph::degree(int v) const {
    double s = 0;
    for (double w : weights(v)) s += w;
    return static_cast<int>(s);
}

int Graph::max_degree() const {
    int m = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v) m = std::max(m, degree(static_cast<int>(v)));
    return m;
}

int Graph::multiplicity(int u, int v) const {
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return 0;
    return static_cast<int>(weights(u)[it - nb.begin()]);
}

std::size_t Graph::edge_count() const {
    double s = 0;
    for (double w : values_) s += w;
    return static_cast<std::size_t>(s / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
        for (int v : neighbors(static_cast<int>(u)))
            if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    return out;
}

bool Graph::is_simple() const {
    return std::all_of(values_.begin(), values_.end(), [](double w) { return w == 1.0; });
}

bool Graph::connected() const {
    const std::size_t n = vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : neighbors(u))
            if (!seen[v]) { seen[v] = 1; ++count; stack.push_back(v); }
    }
    return count == n;
}

void Graph::apply(const double* x, double* y) const {
    simd::spmv(vertex_count(), offsets_.data(), targets_.data(), values_.data(), x, y);
}

Eigen::MatrixXd Graph::dense_adjacency() const {
    const int n = static_cast<int>(vertex_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        auto nb = neighbors(u);
        auto w = weights(u);
        for (std::size_t k = 0; k < nb.size(); ++k) a(u, nb[k]) = w[k];
    }
    return a;
}

Eigen::MatrixXd Graph::dense_laplacian() const {
    Eigen::MatrixXd l = -dense_adjacency();
    for (int u = 0; u < static_cast<int>(vertex_count()); ++u) l(u, u) += degree(u);
    return l;
}

GraphBuilder::GraphBuilder(const Graph& g, int degree_cap) : degree_cap_(degree_cap) {
    for (const auto& l : g.labels()) add_vertex(l);
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        auto nb = g.neighbors(static_cast<int>(u));
        auto w = g.weights(static_cast<int>(u));
        for (std::size_t k = 0; k < nb.size(); ++k) adj_[u][nb[k]] = static_cast<int>(w[k]);
    }
}

int GraphBuilder::add_vertex(const Label& l) {
    if (index_.count(l)) throw InputError("duplicate vertex label " + label_string(l));
    const int id = static_cast<int>(labels_.size());
    labels_.push_back(l);
    index_.emplace(l, id);
    adj_.emplace_back();
    return id;
}

int GraphBuilder::vertex(const Label& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw InputError("no vertex with label " + label_string(l));
    return it->second;
}

std::optional<int> GraphBuilder::find(const Label& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void GraphBuilder::add_edge(int u, int v, int multiplicity) {
    const int n = static_cast<int>(labels_.size());
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop at " + label_string(labels_[u]));
    if (multiplicity < 1) throw InputError("edge multiplicity must be positive");
    adj_[u][v] += multiplicity;
    adj_[v][u] += multiplicity;
}

void GraphBuilder::remove_edge(int u, int v) {
    if (adj_[u].erase(v) == 0) throw InputError("edge not present");
    adj_[v].erase(u);
}

int GraphBuilder::multiplicity(int u, int v) const {
    auto it = adj_[u].find(v);
    return it == adj_[u].end() ? 0 : it->second;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.labels_ = labels_;
    g.index_ = index_;
    g.offsets_.assign(1, 0);
    for (std::size_t u = 0; u < labels_.size(); ++u) {
        int deg = 0;
        for (auto [v, m] : adj_[u]) {
            g.targets_.push_back(v);
            g.values_.push_back(m);
            deg += m;
        }
        if (deg > degree_cap_)
            throw InputError("degree " + std::to_string(deg) + " at " + label_string(labels_[u]) +
                             " exceeds cap " + std::to_string(degree_cap_));
        g.offsets_.push_back(static_cast<int>(g.targets_.size()));
    }
    return g;
}

}  // namespace combgas

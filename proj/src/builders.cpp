#include "combgas/builders.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "combgas/errors.hpp"

namespace combgas {
namespace {

// all points of [-n, n]^d in lexicographic order
std::vector<Label> box_points(int d, int n) {
    std::vector<Label> out;
    Label p(d, -n);
    while (true) {
        out.push_back(p);
        int i = d - 1;
        while (i >= 0 && p[i] == n) { p[i] = -n; --i; }
        if (i < 0) break;
        ++p[i];
    }
    return out;
}

}  // namespace

Graph build_lattice_box(int d, int n, Boundary boundary) {
    if (d < 1) throw InputError("lattice dimension must be >= 1");
    if (n < 0) throw InputError("box radius must be >= 0");
    GraphBuilder b;
    const auto pts = box_points(d, n);
    for (const auto& p : pts) b.add_vertex(p);
    const int side = 2 * n + 1;
    for (const auto& p : pts) {
        const int u = b.vertex(p);
        for (int i = 0; i < d; ++i) {
            Label q = p;
            if (p[i] < n) {
                q[i] = p[i] + 1;
            } else if (boundary == Boundary::periodic && side >= 3) {
                q[i] = -n;
            } else {
                continue;
            }
            b.add_edge(u, b.vertex(q));
        }
    }
    return b.build();
}

Graph build_chain(int n) {
    if (n < 0) throw InputError("chain radius must be >= 0");
    GraphBuilder b;
    for (int j = -n; j <= n; ++j) b.add_vertex({j});
    for (int j = -n; j < n; ++j) b.add_edge(j + n, j + n + 1);
    return b.build();
}

Graph build_half_chain(int m) {
    if (m < 0) throw InputError("half chain length must be >= 0");
    GraphBuilder b;
    for (int t = 0; t <= m; ++t) b.add_vertex({t});
    for (int t = 0; t < m; ++t) b.add_edge(t, t + 1);
    return b.build();
}

Graph build_cycle(int m) {
    if (m < 3) throw InputError("cycle needs at least 3 vertices");
    GraphBuilder b;
    for (int k = 0; k < m; ++k) b.add_vertex({k});
    for (int k = 0; k < m; ++k) b.add_edge(k, (k + 1) % m);
    return b.build();
}

Graph build_box_chain(int levels) {
    if (levels < 0) throw InputError("box levels must be >= 0");
    GraphBuilder b;
    auto width = [](int t) { return t % 2 == 0 ? 1 : 2; };
    for (int t = 0; t <= levels; ++t)
        for (int s = 0; s < width(t); ++s) b.add_vertex({t, s});
    for (int t = 0; t < levels; ++t)
        for (int s = 0; s < width(t); ++s)
            for (int r = 0; r < width(t + 1); ++r) b.add_edge(b.vertex({t, s}), b.vertex({t + 1, r}));
    return b.build();
}

Graph build_ladder(int n) {
    if (n < 0) throw InputError("ladder radius must be >= 0");
    GraphBuilder b;
    for (int j = -n; j <= n; ++j)
        for (int s = 0; s < 2; ++s) b.add_vertex({j, s});
    for (int j = -n; j <= n; ++j) {
        b.add_edge(b.vertex({j, 0}), b.vertex({j, 1}));
        if (j < n)
            for (int s = 0; s < 2; ++s) b.add_edge(b.vertex({j, s}), b.vertex({j + 1, s}));
    }
    return b.build();
}

Graph disjoint_copies(const Graph& g, int copies) {
    if (copies < 1) throw InputError("need at least one copy");
    GraphBuilder b;
    const int n = static_cast<int>(g.vertex_count());
    for (int c = 0; c < copies; ++c)
        for (int v = 0; v < n; ++v) {
            Label l{c};
            l.insert(l.end(), g.label(v).begin(), g.label(v).end());
            b.add_vertex(l);
        }
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : g.edges()) b.add_edge(c * n + u, c * n + v, g.multiplicity(u, v));
    return b.build();
}

Graph comb_product(const Graph& base, const Graph& fiber, int root) {
    const int nb = static_cast<int>(base.vertex_count());
    const int nf = static_cast<int>(fiber.vertex_count());
    if (root < 0 || root >= nf) throw InputError("comb root is not a fiber vertex");
    GraphBuilder b;
    for (int g = 0; g < nb; ++g)
        for (int h = 0; h < nf; ++h) {
            Label l = base.label(g);
            l.insert(l.end(), fiber.label(h).begin(), fiber.label(h).end());
            b.add_vertex(l);
        }
    auto id = [nf](int g, int h) { return g * nf + h; };
    for (int g = 0; g < nb; ++g)
        for (auto [h, k] : fiber.edges()) b.add_edge(id(g, h), id(g, k), fiber.multiplicity(h, k));
    for (auto [g, k] : base.edges()) b.add_edge(id(g, root), id(k, root), base.multiplicity(g, k));
    return b.build();
}

PerturbedGraph apply_perturbation(const Graph& g, const Perturbation& p) {
    GraphBuilder b(g);
    std::set<int> support_set;
    struct Entry { int u, v, value; };
    std::vector<Entry> d_entries;

    std::set<std::pair<int, int>> removed;
    for (const auto& [lu, lv] : p.removed_edges) {
        const int u = g.id(lu), v = g.id(lv);
        const int m = g.multiplicity(u, v);
        if (m == 0) throw InputError("edge to remove not present: " + label_string(lu) + "-" + label_string(lv));
        b.remove_edge(u, v);
        removed.insert({std::min(u, v), std::max(u, v)});
        d_entries.push_back({u, v, -m});
        support_set.insert(u);
        support_set.insert(v);
    }
    for (const auto& e : p.added_edges) {
        const int u = g.id(e.u), v = g.id(e.v);
        if (removed.count({std::min(u, v), std::max(u, v)}))
            throw InputError("edge both added and removed: " + label_string(e.u) + "-" + label_string(e.v));
        if (g.has_edge(u, v))
            throw InputError("edge to add already present: " + label_string(e.u) + "-" + label_string(e.v));
        b.add_edge(u, v, e.multiplicity);
        d_entries.push_back({u, v, e.multiplicity});
        support_set.insert(u);
        support_set.insert(v);
    }

    // merge all attachments into a single B graph; B labels are (attachment index, label...)
    GraphBuilder bb;
    struct Link { int b_local, base; };
    std::vector<Link> links;
    for (std::size_t a = 0; a < p.attached.size(); ++a) {
        const auto& att = p.attached[a];
        const int off = static_cast<int>(bb.vertex_count());
        for (const auto& l : att.b.labels()) {
            Label bl{static_cast<int>(a)};
            bl.insert(bl.end(), l.begin(), l.end());
            bb.add_vertex(bl);
        }
        for (auto [u, v] : att.b.edges()) bb.add_edge(off + u, off + v, att.b.multiplicity(u, v));
        for (const auto& [lb, lbase] : att.links) {
            auto bv = att.b.find(lb);
            if (!bv) throw InputError("dangling attachment vertex " + label_string(lb));
            auto basev = g.find(lbase);
            if (!basev) throw InputError("attachment link to missing base vertex " + label_string(lbase));
            links.push_back({off + *bv, *basev});
            support_set.insert(*basev);
        }
    }
    Graph bgraph = bb.build();

    std::vector<int> b_ids;
    for (const auto& l : bgraph.labels()) {
        Label al{kAttachedTag};
        al.insert(al.end(), l.begin(), l.end());
        b_ids.push_back(b.add_vertex(al));
    }
    for (auto [u, v] : bgraph.edges()) b.add_edge(b_ids[u], b_ids[v], bgraph.multiplicity(u, v));
    for (const auto& l : links) b.add_edge(b_ids[l.b_local], l.base);

    PerturbedGraph out;
    out.graph = b.build();
    auto& blk = out.blocks;
    blk.support.assign(support_set.begin(), support_set.end());
    const int s = static_cast<int>(blk.support.size());
    auto pos = [&](int v) {
        return static_cast<int>(std::lower_bound(blk.support.begin(), blk.support.end(), v) - blk.support.begin());
    };
    blk.D = Eigen::MatrixXd::Zero(s, s);
    for (const auto& e : d_entries) {
        blk.D(pos(e.u), pos(e.v)) += e.value;
        blk.D(pos(e.v), pos(e.u)) += e.value;
    }
    blk.C = Eigen::MatrixXd::Zero(s, static_cast<int>(bgraph.vertex_count()));
    for (const auto& l : links) blk.C(pos(l.base), l.b_local) += 1.0;
    blk.B = std::move(bgraph);
    blk.b_ids = std::move(b_ids);
    return out;
}

Rational symdiff_density(const Graph& x, const Graph& y, const std::vector<Label>& window) {
    if (window.empty()) throw InputError("empty window");
    std::vector<int> wx, wy;
    for (const auto& l : window) {
        auto a = x.find(l), b = y.find(l);
        if (!a || !b) throw InputError("window vertex " + label_string(l) + " missing from one graph");
        wx.push_back(*a);
        wy.push_back(*b);
    }
    // map (i, j) window-index pairs to multiplicity difference, walking each graph's edges once
    std::map<std::pair<int, int>, int> delta;
    auto collect = [&](const Graph& g, const std::vector<int>& ids, int sign) {
        std::map<int, int> where;
        for (std::size_t i = 0; i < ids.size(); ++i) where[ids[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            auto nb = g.neighbors(ids[i]);
            auto w = g.weights(ids[i]);
            for (std::size_t k = 0; k < nb.size(); ++k) {
                auto it = where.find(nb[k]);
                if (it == where.end() || it->second <= static_cast<int>(i)) continue;
                delta[{static_cast<int>(i), it->second}] += sign * static_cast<int>(w[k]);
            }
        }
    };
    collect(x, wx, 1);
    collect(y, wy, -1);
    std::int64_t diff = 0;
    for (const auto& [key, v] : delta) diff += std::abs(v);
    return Rational(diff, static_cast<std::int64_t>(window.size()));
}

}  // namespace combgas

#include "combgas/catalog.hpp"

#include <cmath>

#include "combgas/errors.hpp"

namespace combgas {
namespace {

int param(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw InputError("missing catalog parameter '" + key + "'");
    return it->second;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

Graph single_vertex() {
    GraphBuilder b;
    b.add_vertex({0});
    return b.build();
}

Eigen::MatrixXd cycle_matrix(int p) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i < p; ++i) {
        d(i, (i + 1) % p) = 1.0;
        d((i + 1) % p, i) = 1.0;
    }
    return d;
}

void validate(const std::string& name, const Params& p) {
    if (name == "nail_chain" || name == "ladder") return;
    if (name == "star") require(param(p, "n") >= 1, "star needs n >= 1");
    else if (name == "star_box") require(param(p, "n") >= 1, "star_box needs n >= 1");
    else if (name == "polygonal_star" || name == "polygonal_star_box") require(param(p, "p") >= 3, "polygon size must be >= 3");
    else if (name == "h_graph") require(param(p, "k") >= 1, "h_graph needs k >= 1");
    else if (name == "modified_ladder") {
        require(param(p, "k") >= 0, "modified_ladder needs k >= 0");
        require(param(p, "r") >= 0, "modified_ladder needs r >= 0");
    } else if (name == "comb") require(param(p, "d") >= 1, "comb needs d >= 1");
    else throw InputError("unknown catalog entry '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"nail_chain", "star", "star_box", "polygonal_star", "polygonal_star_box",
            "h_graph", "ladder", "modified_ladder", "comb"};
}

Params catalog_default_params(const std::string& name) {
    if (name == "star") return {{"n", 3}};
    if (name == "star_box") return {{"n", 5}};
    if (name == "polygonal_star" || name == "polygonal_star_box") return {{"p", 3}};
    if (name == "h_graph") return {{"k", 1}};
    if (name == "modified_ladder") return {{"k", 3}, {"r", 0}};
    if (name == "comb") return {{"d", 1}};
    if (name == "nail_chain" || name == "ladder") return {};
    throw InputError("unknown catalog entry '" + name + "'");
}

bool catalog_has_closed_form(const std::string& name, const Params& p) {
    try {
        catalog_expected(name, p);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

double catalog_expected(const std::string& name, const Params& p) {
    validate(name, p);
    if (name == "nail_chain") return std::sqrt(2.0 + std::sqrt(5.0));
    if (name == "star") {
        const int n = param(p, "n");
        require(n >= 3, "star closed form needs n >= 3");
        return n / std::sqrt(n - 1.0);
    }
    if (name == "star_box") {
        const int n = param(p, "n");
        require(n >= 4, "star_box closed form needs n >= 4");
        return n / std::sqrt(n - 2.0);
    }
    if (name == "polygonal_star") return 2.5;
    if (name == "polygonal_star_box") return 3.0;
    if (name == "h_graph") {
        const double k = param(p, "k");
        return std::sqrt(k * k + 4.0);
    }
    if (name == "ladder") return 3.0;
    if (name == "comb") {
        const double d = param(p, "d");
        return 2.0 * std::sqrt(d * d + 1.0);
    }
    throw InputError("no closed form for '" + name + "'");
}

double catalog_base_radius(const std::string& name, const Params& p) {
    validate(name, p);
    if (name == "star_box" || name == "polygonal_star_box") return 2.0 * std::sqrt(2.0);
    if (name == "ladder" || name == "modified_ladder") return 3.0;
    return 2.0;
}

double catalog_max_degree(const std::string& name, const Params& p) {
    validate(name, p);
    if (name == "nail_chain") return 3;
    if (name == "star") return std::max(param(p, "n"), 2);
    if (name == "star_box") return std::max(param(p, "n"), 4);
    if (name == "polygonal_star") return 3;
    if (name == "polygonal_star_box") return 4;
    if (name == "h_graph") return param(p, "k") + 2;
    if (name == "ladder") return 3;
    if (name == "modified_ladder") return std::max(3, param(p, "k") + 2);
    return 2 * param(p, "d") + 2;  // comb
}

SecularSystem catalog_system(const std::string& name, const Params& p) {
    validate(name, p);
    auto line = std::make_shared<LineResolvent>();
    auto half = std::make_shared<HalfLineResolvent>();
    auto box = std::make_shared<BoxResolvent>();
    const Eigen::MatrixXd none(0, 0);

    if (name == "nail_chain")
        return make_secular_system(name, line, {{0}}, Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Ones(1, 1),
                                   single_vertex());
    if (name == "star" || name == "star_box") {
        const int n = param(p, "n");
        std::vector<Label> sup;
        for (int s = 0; s < n; ++s) sup.push_back(name == "star" ? Label{s, 0} : Label{s, 0, 0});
        BaseResolventPtr base = name == "star" ? std::make_shared<CopiesResolvent>(half, n)
                                               : std::make_shared<CopiesResolvent>(box, n);
        return make_secular_system(name, base, sup, Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Ones(n, 1),
                                   single_vertex());
    }
    if (name == "polygonal_star" || name == "polygonal_star_box") {
        const int q = param(p, "p");
        std::vector<Label> sup;
        for (int s = 0; s < q; ++s) sup.push_back(name == "polygonal_star" ? Label{s, 0} : Label{s, 0, 0});
        BaseResolventPtr base = name == "polygonal_star" ? std::make_shared<CopiesResolvent>(half, q)
                                                         : std::make_shared<CopiesResolvent>(box, q);
        return make_secular_system(name, base, sup, cycle_matrix(q), Eigen::MatrixXd(q, 0), Graph());
    }
    if (name == "h_graph") {
        const int k = param(p, "k");
        Eigen::MatrixXd d(2, 2);
        d << 0, k, k, 0;
        return make_secular_system(name, std::make_shared<CopiesResolvent>(line, 2), {{0, 0}, {1, 0}}, d,
                                   Eigen::MatrixXd(2, 0), Graph());
    }
    if (name == "ladder")
        return make_secular_system(name, std::make_shared<LadderResolvent>(), {}, none, none, Graph());
    if (name == "modified_ladder") {
        const int k = param(p, "k"), r = param(p, "r");
        std::vector<Label> sup;
        std::vector<double> rung;  // D entry for the rung at sup[2i], sup[2i+1]
        if (k != 1) {
            sup.push_back({0, 0});
            sup.push_back({0, 1});
            rung.push_back(k - 1);
        }
        for (int i = 1; i <= r; ++i)
            for (int j : {-i, i}) {
                sup.push_back({j, 0});
                sup.push_back({j, 1});
                rung.push_back(-1.0);
            }
        const int ns = static_cast<int>(sup.size());
        Eigen::MatrixXd d = Eigen::MatrixXd::Zero(ns, ns);
        for (std::size_t i = 0; i < rung.size(); ++i) d(2 * i, 2 * i + 1) = d(2 * i + 1, 2 * i) = rung[i];
        return make_secular_system(name, std::make_shared<LadderResolvent>(), sup, d, Eigen::MatrixXd(ns, 0), Graph());
    }
    // comb: Bloch reduction at zero base momentum, one fiber Z with 2d on the root
    const int dd = param(p, "d");
    return make_secular_system(name, line, {{0}}, Eigen::MatrixXd::Constant(1, 1, 2.0 * dd), Eigen::MatrixXd(1, 0),
                               Graph());
}

CatalogTruncation catalog_truncation(const std::string& name, const Params& p, int m) {
    validate(name, p);
    require(m >= 1, "truncation size must be >= 1");
    CatalogTruncation t;
    auto& pert = t.perturbation;
    if (name == "nail_chain") {
        t.base = build_chain(m);
        pert.attached.push_back({single_vertex(), {{{0}, {0}}}});
    } else if (name == "star" || name == "star_box") {
        const int n = param(p, "n");
        const bool is_box = name == "star_box";
        t.base = disjoint_copies(is_box ? build_box_chain(2 * m) : build_half_chain(m), n);
        Attachment a{single_vertex(), {}};
        for (int s = 0; s < n; ++s) a.links.push_back({{0}, is_box ? Label{s, 0, 0} : Label{s, 0}});
        pert.attached.push_back(std::move(a));
    } else if (name == "polygonal_star" || name == "polygonal_star_box") {
        const int q = param(p, "p");
        const bool is_box = name == "polygonal_star_box";
        t.base = disjoint_copies(is_box ? build_box_chain(2 * m) : build_half_chain(m), q);
        for (int s = 0; s < q; ++s) {
            const int r = (s + 1) % q;
            pert.added_edges.push_back(is_box ? AddedEdge{{s, 0, 0}, {r, 0, 0}, 1} : AddedEdge{{s, 0}, {r, 0}, 1});
        }
    } else if (name == "h_graph") {
        t.base = disjoint_copies(build_chain(m), 2);
        pert.added_edges.push_back({{0, 0}, {1, 0}, param(p, "k")});
    } else if (name == "ladder") {
        t.base = build_ladder(m);
    } else if (name == "modified_ladder") {
        const int k = param(p, "k"), r = param(p, "r");
        require(m > r, "modified_ladder truncation must exceed r");
        t.base = build_ladder(m);
        if (k == 0) {
            pert.removed_edges.push_back({{0, 0}, {0, 1}});
        } else if (k >= 2) {
            // parallel links cannot be "added" on top of an existing edge; start from the ladder
            // without its origin rung and add the rung back with multiplicity k
            GraphBuilder b(t.base);
            b.remove_edge(b.vertex({0, 0}), b.vertex({0, 1}));
            t.base = b.build();
            pert.added_edges.push_back({{0, 0}, {0, 1}, k});
        }
        for (int i = 1; i <= r; ++i)
            for (int j : {-i, i}) pert.removed_edges.push_back({{j, 0}, {j, 1}});
    } else {  // comb
        const int d = param(p, "d");
        const Graph torus = build_lattice_box(d, m, Boundary::periodic);
        GraphBuilder pts;
        for (const auto& l : torus.labels()) pts.add_vertex(l);
        t.base = comb_product(pts.build(), build_chain(m), m);
        for (auto [u, v] : torus.edges()) {
            Label a = torus.label(u), b = torus.label(v);
            a.push_back(0);
            b.push_back(0);
            pert.added_edges.push_back({a, b, 1});
        }
    }
    t.assembled = apply_perturbation(t.base, pert);
    return t;
}

}  // namespace combgas

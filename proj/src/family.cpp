#include "combgas/family.hpp"

#include <algorithm>
#include <cmath>

#include "combgas/errors.hpp"
#include "combgas/spectral.hpp"

namespace combgas {

GraphFamily family_chain() { return GraphFamily{}; }

GraphFamily family_lattice(int d, Boundary b) {
    GraphFamily f;
    f.kind = FamilyKind::lattice_box;
    f.d = d;
    f.boundary = b;
    return f;
}

GraphFamily family_comb(int d, Boundary b) {
    auto f = family_lattice(d, b);
    f.kind = FamilyKind::comb;
    return f;
}

GraphFamily family_fibers(int d, Boundary b) {
    auto f = family_lattice(d, b);
    f.kind = FamilyKind::fibers;
    return f;
}

GraphFamily family_catalog(const std::string& name, const Params& p) {
    GraphFamily f;
    f.kind = FamilyKind::catalog;
    f.catalog_name = name;
    f.params = p;
    catalog_base_radius(name, p);  // validates
    return f;
}

Graph GraphFamily::build(int n) const {
    if (n < 0) throw InputError("family index must be >= 0");
    Graph g;
    switch (kind) {
        case FamilyKind::chain: g = build_chain(n); break;
        case FamilyKind::lattice_box: g = build_lattice_box(d, n, boundary); break;
        case FamilyKind::comb:
            g = comb_product(build_lattice_box(d, n, boundary), build_chain(n), n);
            break;
        case FamilyKind::fibers: {
            const Graph box = build_lattice_box(d, n, boundary);
            GraphBuilder pts;
            for (const auto& l : box.labels()) pts.add_vertex(l);
            g = comb_product(pts.build(), build_chain(n), n);
            break;
        }
        case FamilyKind::catalog: g = catalog_truncation(catalog_name, params, std::max(n, 1)).assembled.graph; break;
    }
    if (!perturbation.empty()) g = apply_perturbation(g, perturbation).graph;
    return g;
}

std::size_t GraphFamily::volume(int n) const { return build(n).vertex_count(); }

Label GraphFamily::anchor_label() const {
    switch (kind) {
        case FamilyKind::chain: return {0};
        case FamilyKind::lattice_box: return Label(d, 0);
        case FamilyKind::comb:
        case FamilyKind::fibers: return Label(d + 1, 0);
        case FamilyKind::catalog: break;
    }
    const auto g = build(1);
    return g.label(default_anchor(g));
}

bool GraphFamily::nested() const {
    if (kind == FamilyKind::catalog) return catalog_name != "comb";
    return boundary == Boundary::free;
}

std::string GraphFamily::describe() const {
    const std::string bd = boundary == Boundary::free ? "free" : "periodic";
    switch (kind) {
        case FamilyKind::chain: return "chain";
        case FamilyKind::lattice_box: return "lattice(d=" + std::to_string(d) + "," + bd + ")";
        case FamilyKind::comb: return "comb(d=" + std::to_string(d) + "," + bd + ")";
        case FamilyKind::fibers: return "fibers(d=" + std::to_string(d) + "," + bd + ")";
        case FamilyKind::catalog: {
            std::string s = "catalog:" + catalog_name;
            for (const auto& [k, v] : params) s += "," + k + "=" + std::to_string(v);
            return s;
        }
    }
    return "?";
}

Rational folner_ratio(const GraphFamily& f, int n) {
    const Graph g = f.build(n);
    const auto vol = static_cast<std::int64_t>(g.vertex_count());
    std::int64_t boundary = 0;
    auto comb_like = [&](int dim, bool periodic_base, bool with_backbone) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const auto& l = g.label(static_cast<int>(v));
            const bool backbone = with_backbone && l[dim] == 0;
            const int inf_deg = 2 + (backbone ? 2 * dim : 0);
            (void)periodic_base;
            if (g.degree(static_cast<int>(v)) < inf_deg) ++boundary;
        }
    };
    switch (f.kind) {
        case FamilyKind::chain:
        case FamilyKind::lattice_box: {
            if (f.kind == FamilyKind::lattice_box && f.boundary == Boundary::periodic) return Rational(0, vol);
            const int inf_deg = f.kind == FamilyKind::chain ? 2 : 2 * f.d;
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                if (g.degree(static_cast<int>(v)) < inf_deg) ++boundary;
            break;
        }
        case FamilyKind::comb: comb_like(f.d, f.boundary == Boundary::periodic, true); break;
        case FamilyKind::fibers: comb_like(f.d, f.boundary == Boundary::periodic, false); break;
        case FamilyKind::catalog:
            if (f.catalog_name == "comb") {
                comb_like(f.params.at("d"), true, true);
            } else {
                // nested exhaustion: compare with the next volume
                const Graph next = f.build(n + 1);
                for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                    const int w = next.id(g.label(static_cast<int>(v)));
                    if (next.degree(w) > g.degree(static_cast<int>(v))) ++boundary;
                }
            }
            break;
    }
    return Rational(boundary, vol);
}

PFLimitReport norm_sequence(const GraphFamily& f, int n_max, int window, double tol) {
    if (n_max < 2) throw InputError("norm_sequence: n_max must be >= 2");
    PFLimitReport r;
    SpectralResult last;
    Graph g;
    for (int n = 1; n <= n_max; ++n) {
        g = f.build(n);
        last = top_eigenpair(g, tol);
        if (!r.norms.empty() && last.top_eigenvalue < r.norms.back() - 1e-12 * std::fabs(r.norms.back()) - tol)
            throw NumericError("norm_sequence: ||A_n|| decreased at n = " + std::to_string(n) +
                               ", eigensolver did not converge");
        r.ns.push_back(n);
        r.norms.push_back(last.top_eigenvalue);
    }
    r.extrapolated_norm = r.norms.size() >= 3 ? aitken(r.norms) : Extrapolation{r.norms.back(), 0.0};
    const double top = *std::max_element(r.norms.begin(), r.norms.end());
    r.extrapolated_norm.value = std::max(r.extrapolated_norm.value, top);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& l = g.label(static_cast<int>(v));
        const bool inside = std::all_of(l.begin(), l.end(), [&](int x) { return x == kAttachedTag || std::abs(x) <= window; });
        if (inside) r.pf_pointwise[l] = last.pf_vector[v];
    }
    return r;
}

}  // namespace combgas

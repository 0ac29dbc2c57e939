#include "combgas/graph_io.hpp"

#include <fstream>
#include <ostream>

#include "combgas/catalog.hpp"
#include "combgas/errors.hpp"

namespace combgas {
namespace {

int get_int(const json& params, const std::string& key, const std::string& where, std::optional<int> def = {}) {
    if (!params.contains(key)) {
        if (def) return *def;
        throw InputError("missing field '" + where + "." + key + "'");
    }
    const auto& v = params.at(key);
    if (!v.is_number_integer()) throw InputError("field '" + where + "." + key + "': expected integer");
    return v.get<int>();
}

Boundary get_boundary(const json& params, const std::string& where) {
    if (!params.contains("boundary")) return Boundary::free;
    const auto& v = params.at("boundary");
    if (v == "free") return Boundary::free;
    if (v == "periodic") return Boundary::periodic;
    throw InputError("field '" + where + ".boundary': expected \"free\" or \"periodic\"");
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "free") return Boundary::free;
    if (s == "periodic") return Boundary::periodic;
    throw InputError("boundary must be free or periodic, got '" + s + "'");
}

int to_int(const std::string& key, const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw InputError("");
        return v;
    } catch (const std::exception&) {
        throw InputError("parameter '" + key + "': expected integer, got '" + s + "'");
    }
}

Graph build_base(const json& j, const std::string& where) {
    if (!j.is_object()) throw InputError("'" + where + "': expected an object");
    if (!j.contains("builder") || !j.at("builder").is_string())
        throw InputError("missing or non-string field '" + where + ".builder'");
    const std::string b = j.at("builder");
    const json params = j.value("params", json::object());
    if (!params.is_object()) throw InputError("field '" + where + ".params': expected an object");
    const std::string pw = where + ".params";
    if (b == "chain") return build_chain(get_int(params, "n", pw));
    if (b == "half_chain") return build_half_chain(get_int(params, "m", pw));
    if (b == "cycle") return build_cycle(get_int(params, "m", pw));
    if (b == "lattice") return build_lattice_box(get_int(params, "d", pw), get_int(params, "n", pw), get_boundary(params, pw));
    if (b == "box_chain") return build_box_chain(get_int(params, "levels", pw));
    if (b == "ladder") return build_ladder(get_int(params, "n", pw));
    if (b == "comb") {
        const int d = get_int(params, "d", pw), n = get_int(params, "n", pw);
        return comb_product(build_lattice_box(d, n, get_boundary(params, pw)), build_chain(n), n);
    }
    if (b == "catalog") {
        if (!params.contains("name") || !params.at("name").is_string())
            throw InputError("missing or non-string field '" + pw + ".name'");
        const std::string name = params.at("name");
        Params p = catalog_default_params(name);
        for (const auto& [k, v] : params.items())
            if (k != "name" && k != "m") p[k] = get_int(params, k, pw);
        return catalog_truncation(name, p, get_int(params, "m", pw, 20)).assembled.graph;
    }
    throw InputError("field '" + where + ".builder': unknown builder '" + b + "'");
}

}  // namespace

json label_to_json(const Label& l) { return json(l); }

Label label_from_json(const json& j, const std::string& field) {
    if (!j.is_array()) throw InputError("field '" + field + "': expected a coordinate array");
    Label l;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError("field '" + field + "': coordinates must be integers");
        l.push_back(x.get<int>());
    }
    return l;
}

GraphDescription parse_graph_description(const json& j) {
    GraphDescription g;
    g.base = build_base(j, "$");
    if (!j.contains("perturbation")) return g;
    const auto& ops = j.at("perturbation");
    if (!ops.is_array()) throw InputError("field '$.perturbation': expected an array");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const std::string w = "$.perturbation[" + std::to_string(i) + "]";
        const auto& op = ops[i];
        if (!op.is_object() || !op.contains("op") || !op.at("op").is_string())
            throw InputError("field '" + w + ".op': missing or not a string");
        const std::string kind = op.at("op");
        if (kind == "add_edge" || kind == "remove_edge") {
            if (!op.contains("u") || !op.contains("v")) throw InputError("field '" + w + "': needs u and v");
            Label u = label_from_json(op.at("u"), w + ".u"), v = label_from_json(op.at("v"), w + ".v");
            if (kind == "add_edge") g.perturbation.added_edges.push_back({u, v, get_int(op, "multiplicity", w, 1)});
            else g.perturbation.removed_edges.emplace_back(u, v);
        } else if (kind == "attach") {
            if (!op.contains("graph")) throw InputError("missing field '" + w + ".graph'");
            Attachment a;
            a.b = build_base(op.at("graph"), w + ".graph");
            if (!op.contains("links") || !op.at("links").is_array())
                throw InputError("field '" + w + ".links': expected an array of [b-label, base-label]");
            for (std::size_t k = 0; k < op.at("links").size(); ++k) {
                const auto& link = op.at("links")[k];
                const std::string lw = w + ".links[" + std::to_string(k) + "]";
                if (!link.is_array() || link.size() != 2) throw InputError("field '" + lw + "': expected a pair");
                a.links.emplace_back(label_from_json(link[0], lw + "[0]"), label_from_json(link[1], lw + "[1]"));
            }
            g.perturbation.attached.push_back(std::move(a));
        } else {
            throw InputError("field '" + w + ".op': unknown op '" + kind + "'");
        }
    }
    return g;
}

GraphDescription load_graph_description(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph description '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
    return parse_graph_description(j);
}

GraphFamily parse_family(const std::string& spec, const std::map<std::string, std::string>& params) {
    auto get = [&](const std::string& k, const std::string& def) {
        auto it = params.find(k);
        return it == params.end() ? def : it->second;
    };
    auto check_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [k, v] : params) {
            bool ok = false;
            for (const char* a : allowed) ok = ok || k == a;
            if (!ok) throw InputError("parameter '" + k + "' not understood by family '" + spec + "'");
        }
    };
    if (spec == "chain") {
        check_keys({});
        return family_chain();
    }
    if (spec == "lattice" || spec == "comb" || spec == "fibers") {
        check_keys({"d", "boundary"});
        const int d = to_int("d", get("d", "1"));
        if (d < 1) throw InputError("parameter 'd' must be >= 1");
        const Boundary b = boundary_from_string(get("boundary", spec == "lattice" ? "free" : "periodic"));
        if (spec == "lattice") return family_lattice(d, b);
        return spec == "comb" ? family_comb(d, b) : family_fibers(d, b);
    }
    if (spec.rfind("catalog:", 0) == 0) {
        const std::string name = spec.substr(8);
        Params p = catalog_default_params(name);
        for (const auto& [k, v] : params) {
            if (!p.count(k)) throw InputError("parameter '" + k + "' not understood by catalog entry '" + name + "'");
            p[k] = to_int(k, v);
        }
        return family_catalog(name, p);
    }
    throw InputError("unknown family '" + spec + "' (chain, lattice, comb, fibers, catalog:<name>)");
}

void write_edge_list(std::ostream& os, const Graph& g) {
    for (auto [u, v] : g.edges())
        for (int k = 0; k < g.multiplicity(u, v); ++k) os << u << ' ' << v << '\n';
}

void write_label_table(std::ostream& os, const Graph& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) os << v << ' ' << label_string(g.label(int(v))) << '\n';
}

json graph_to_json(const Graph& g) {
    json vs = json::array(), es = json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) vs.push_back({{"id", v}, {"label", g.label(int(v))}});
    for (auto [u, v] : g.edges()) es.push_back({u, v, g.multiplicity(u, v)});
    return {{"vertices", vs}, {"edges", es}};
}

}  // namespace combgas

#pragma once
// JSON graph descriptions, family specs from the command line, and graph export.
//
// Description: {"builder": "chain", "params": {"n": 5},
//               "perturbation": [{"op": "add_edge", "u": [0], "v": [2]},
//                                {"op": "remove_edge", "u": [0], "v": [1]},
//                                {"op": "attach", "graph": {...}, "links": [[[0], [0]]]}]}
// Builders: chain(n), half_chain(m), cycle(m), lattice(d, n, boundary), box_chain(levels),
// ladder(n), comb(d, n, boundary), catalog(name, m, ...catalog params).

#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "combgas/builders.hpp"
#include "combgas/family.hpp"

namespace combgas {

using json = nlohmann::json;

struct GraphDescription {
    Graph base;
    Perturbation perturbation;
    PerturbedGraph assemble() const { return apply_perturbation(base, perturbation); }
};

GraphDescription parse_graph_description(const json& j);
GraphDescription load_graph_description(const std::string& path);

// "chain", "lattice", "comb", "fibers", "catalog:<name>" with key=value params
// (d, boundary=free|periodic, and catalog parameters)
GraphFamily parse_family(const std::string& spec, const std::map<std::string, std::string>& params);

void write_edge_list(std::ostream& os, const Graph& g);    // "u v" per line, parallel edges repeated
void write_label_table(std::ostream& os, const Graph& g);  // "id label"
json graph_to_json(const Graph& g);

json label_to_json(const Label& l);
Label label_from_json(const json& j, const std::string& field);

}  // namespace combgas

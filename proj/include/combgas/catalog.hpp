#pragma once
// Perturbed graphs with closed-form norms. Each entry provides the infinite secular system,
// finite truncations (base graph + perturbation) and the expected norm.
//
//   nail_chain            Z with one pendant vertex at 0
//   star(n)               n half lines whose origins link to one extra vertex
//   star_box(n)           same with box graphs
//   polygonal_star(p)     p half lines, origins joined in a p-cycle
//   polygonal_star_box(p) same with box graphs
//   h_graph(k)            two copies of Z, k parallel links between the origins
//   ladder                Z x K2 (no perturbation)
//   modified_ladder(k,r)  origin rung with multiplicity k (0 removes it), rungs at 1..r and -1..-r removed
//   comb(d)               Z^d comb with Z fibers; the infinite system is the zero-momentum reduction

#include <map>
#include <string>
#include <vector>

#include "combgas/secular.hpp"

namespace combgas {

using Params = std::map<std::string, int>;

std::vector<std::string> catalog_names();
Params catalog_default_params(const std::string& name);

// closed form; throws InputError outside the validity range
double catalog_expected(const std::string& name, const Params& p);
bool catalog_has_closed_form(const std::string& name, const Params& p);

double catalog_base_radius(const std::string& name, const Params& p);
double catalog_max_degree(const std::string& name, const Params& p);
SecularSystem catalog_system(const std::string& name, const Params& p);

struct CatalogTruncation {
    Graph base;
    Perturbation perturbation;
    PerturbedGraph assembled;
};
// m = linear size (strand length, chain radius, number of box diamonds, comb box radius)
CatalogTruncation catalog_truncation(const std::string& name, const Params& p, int m);

}  // namespace combgas

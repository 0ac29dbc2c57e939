#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "combgas/builders.hpp"
#include "combgas/errors.hpp"
#include "combgas/family.hpp"
#include "combgas/graph_io.hpp"

using namespace combgas;

namespace {
int count_degree(const Graph& g, int deg) {
    int c = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) c += g.degree(int(v)) == deg;
    return c;
}
}  // namespace

TEST_CASE("lattice boxes") {
    auto p = build_lattice_box(1, 1, Boundary::free);
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);
    auto c = build_lattice_box(1, 1, Boundary::periodic);
    CHECK(c.vertex_count() == 3);
    CHECK(c.edge_count() == 3);
    auto t = build_lattice_box(2, 2, Boundary::periodic);
    CHECK(t.vertex_count() == 25);
    CHECK(t.edge_count() == 50);
    CHECK(count_degree(t, 4) == 25);
    CHECK(t.is_simple());
    CHECK(t.connected());
}

TEST_CASE("chains") {
    auto g0 = build_chain(0);
    CHECK(g0.vertex_count() == 1);
    CHECK(g0.edge_count() == 0);
    auto g2 = build_chain(2);
    CHECK(g2.vertex_count() == 5);
    CHECK(g2.edge_count() == 4);
    auto g3 = build_chain(3);
    CHECK(g3.max_degree() == 2);
    CHECK(count_degree(g3, 1) == 2);
    CHECK(g3.id({-3}) != g3.id({3}));
    CHECK_THROWS_AS(build_chain(-1), InputError);
}

TEST_CASE("comb product") {
    auto g = comb_product(build_chain(1), build_chain(1), 1);  // root = center of the fiber
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 8);
    CHECK(g.has_edge(g.id({-1, 0}), g.id({0, 0})));
    CHECK_FALSE(g.has_edge(g.id({-1, 1}), g.id({0, 1})));

    auto single = comb_product(build_chain(0), build_chain(4), 4);
    auto fiber = build_chain(4);
    CHECK(single.vertex_count() == fiber.vertex_count());
    CHECK(single.edge_count() == fiber.edge_count());
}

TEST_CASE("backbone edges have density zero") {
    for (int n : {2, 5, 9}) {
        const auto comb = family_comb(1, Boundary::periodic).build(n);
        const auto fib = family_fibers(1, Boundary::periodic).build(n);
        const auto r = symdiff_density(comb, fib, comb.labels());
        CHECK(r == Rational(2 * n + 1, (2 * n + 1) * (2 * n + 1)));
        // free base: one backbone edge fewer
        const auto combf = family_comb(1, Boundary::free).build(n);
        const auto fibf = family_fibers(1, Boundary::free).build(n);
        CHECK(symdiff_density(combf, fibf, combf.labels()) == Rational(2 * n, (2 * n + 1) * (2 * n + 1)));
    }
}

TEST_CASE("symmetric difference density") {
    auto g = build_chain(6);
    CHECK(symdiff_density(g, g, g.labels()) == Rational(0, 1));
    Perturbation p;
    p.added_edges.push_back({{0}, {2}, 1});
    auto h = apply_perturbation(g, p).graph;
    CHECK(symdiff_density(h, g, g.labels()) == Rational(1, 13));
}

TEST_CASE("perturbations and their blocks") {
    auto g = build_chain(5);
    auto same = apply_perturbation(g, {});
    CHECK(same.graph.edge_count() == g.edge_count());
    CHECK(same.blocks.support.empty());
    CHECK(same.blocks.B.vertex_count() == 0);

    // nail: one vertex hung on the origin
    Perturbation nail;
    nail.attached.push_back({build_chain(0), {{{0}, {0}}}});
    auto pn = apply_perturbation(g, nail);
    CHECK(pn.graph.vertex_count() == 12);
    CHECK(pn.graph.degree(pn.graph.id({0})) == 3);
    REQUIRE(pn.blocks.support.size() == 1);
    CHECK(pn.blocks.C(0, 0) == 1.0);
    CHECK(pn.blocks.D(0, 0) == 0.0);

    // two chains, k parallel links between the origins
    const int k = 3;
    auto two = disjoint_copies(build_chain(4), 2);
    Perturbation links;
    links.added_edges.push_back({{0, 0}, {1, 0}, k});
    auto ph = apply_perturbation(two, links);
    CHECK(ph.graph.multiplicity(ph.graph.id({0, 0}), ph.graph.id({1, 0})) == k);
    CHECK_FALSE(ph.graph.is_simple());
    REQUIRE(ph.blocks.support.size() == 2);
    CHECK(ph.blocks.D(0, 1) == k);
    CHECK(ph.blocks.D(1, 0) == k);

    Perturbation cut;
    cut.removed_edges.emplace_back(Label{0}, Label{1});
    auto pc = apply_perturbation(g, cut);
    CHECK(pc.graph.edge_count() == g.edge_count() - 1);
    CHECK(pc.blocks.D(0, 1) == -1.0);

    Perturbation bad;
    bad.removed_edges.emplace_back(Label{0}, Label{3});
    CHECK_THROWS_AS(apply_perturbation(g, bad), InputError);
}

TEST_CASE("Folner ratios") {
    for (int n : {1, 3, 10}) {
        CHECK(folner_ratio(family_chain(), n) == Rational(2, 2 * n + 1));
        CHECK(folner_ratio(family_lattice(2, Boundary::free), n) == Rational(8 * n, (2 * n + 1) * (2 * n + 1)));
        CHECK(folner_ratio(family_lattice(3, Boundary::periodic), n).num == 0);
    }
    // ratios of amenable exhaustions go to zero
    const auto comb = family_comb(1, Boundary::free);
    CHECK(folner_ratio(comb, 40).value() < folner_ratio(comb, 10).value());
    CHECK(folner_ratio(comb, 40).value() < 0.03);
}

TEST_CASE("JSON descriptions") {
    auto d = parse_graph_description(json::parse(R"({"builder":"chain","params":{"n":3},
        "perturbation":[{"op":"attach","graph":{"builder":"chain","params":{"n":0}},"links":[[[0],[0]]]}]})"));
    auto pg = d.assemble();
    CHECK(pg.graph.vertex_count() == 8);

    auto msg = [](const char* text) {
        try {
            parse_graph_description(json::parse(text));
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(msg(R"({"builder":"chain","params":{"n":"x"}})").find("$.params.n") != std::string::npos);
    CHECK(msg(R"({"params":{}})").find("$.builder") != std::string::npos);
    CHECK(msg(R"({"builder":"chain","params":{"n":2},"perturbation":[{"op":"add_edge","u":[0]}]})")
              .find("$.perturbation[0]") != std::string::npos);
    CHECK(msg(R"({"builder":"chain","params":{"n":2},"perturbation":[{"op":"add_edge","u":[0],"v":["a"]}]})")
              .find("$.perturbation[0].v") != std::string::npos);

    auto j = graph_to_json(build_chain(1));
    CHECK(j["vertices"].size() == 3);
    CHECK(j["edges"].size() == 2);
    CHECK(label_from_json(label_to_json({1, -2}), "x") == Label{1, -2});
}

TEST_CASE("family specs") {
    CHECK(parse_family("comb", {{"d", "2"}}).boundary == Boundary::periodic);
    CHECK(parse_family("lattice", {{"d", "3"}}).boundary == Boundary::free);
    CHECK(parse_family("catalog:star", {{"n", "4"}}).params.at("n") == 4);
    CHECK_THROWS_AS(parse_family("catalog:star", {{"q", "4"}}), InputError);
    CHECK_THROWS_AS(parse_family("torus", {}), InputError);
    CHECK_THROWS_AS(parse_family("lattice", {{"d", "two"}}), InputError);
}

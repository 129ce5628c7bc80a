#include <catch2/catch_amalgamated.hpp>

#include "mcd/inequality.hpp"

using namespace mcd;

TEST_CASE("normalize divides by the content and is idempotent") {
    LinearInequality q = make_inequality({Int(4), Int(6), Int(0)}, Int(10));
    REQUIRE(q.coeffs == std::vector<Int>{2, 3, 0});
    REQUIRE(q.rhs == 5);
    LinearInequality again = q;
    again.normalize();
    REQUIRE(again == q);
}

TEST_CASE("support and canonical order") {
    LinearInequality narrow = make_inequality({Int(0), Int(1), Int(0)}, Int(0));
    LinearInequality wide = make_inequality({Int(1), Int(1), Int(1)}, Int(2));
    REQUIRE(narrow.support() == EdgeSet::of({1}));
    REQUIRE(wide.full_support());
    REQUIRE(canonical_less(narrow, wide));
}

TEST_CASE("edge and path inequalities depend on the pair set") {
    MulticutInstance inst =
        build_instance(build_graph(3, {{0, 1}, {0, 2}, {1, 2}}), {{1, 2}});
    REQUIRE(gen_edge_ineq(inst, 2).rhs == 1);
    REQUIRE(gen_edge_ineq(inst, 0).rhs == 0);

    LinearInequality via_center = gen_path_ineq(inst, {0, 1});
    REQUIRE(via_center.coeffs == std::vector<Int>{1, 1, 0});
    REQUIRE(via_center.rhs == 1);
    REQUIRE_THROWS_AS(gen_path_ineq(inst, {0, 2}), Error);
}

TEST_CASE("circular star generator") {
    Generated gen = gen_circular_star(5);
    REQUIRE(gen.instance.graph.node_count == 6);
    REQUIRE(gen.instance.graph.edge_count() == 5);
    REQUIRE(gen.instance.pairs.size() == 5);
    for (const NodePair& p : gen.instance.pairs) REQUIRE(p.a != 0);
    REQUIRE(gen.ineq.coeffs == std::vector<Int>(5, 1));
    REQUIRE(gen.ineq.rhs == 3);
    REQUIRE(gen.ineq.provenance.family == "circular-star");

    REQUIRE_THROWS_AS(gen_circular_star(4), Error);
    REQUIRE_THROWS_AS(gen_circular_star(1), Error);
}

TEST_CASE("complete star generator") {
    Generated gen = gen_complete_star(4);
    REQUIRE(gen.instance.pairs.size() == 6);
    REQUIRE(gen.ineq.rhs == 3);
    REQUIRE_THROWS_AS(gen_complete_star(1), Error);
}

TEST_CASE("tree generator fixes the edge layout") {
    Generated gen = gen_tree_ineq(4, 2);
    const Graph& g = gen.instance.graph;
    // Root edges first: L1 edge i-1 = {0, i}.
    for (int i = 1; i <= 4; ++i) REQUIRE(g.edges[i - 1] == std::pair<int, int>(0, i));
    REQUIRE(g.edge_count() == 4 + 2 * 6);
    REQUIRE(gen.instance.pairs.size() == 6);
    for (int e = 0; e < 4; ++e) REQUIRE(gen.ineq.coeffs[e] == 2);
    for (int e = 4; e < g.edge_count(); ++e) REQUIRE(gen.ineq.coeffs[e] == 1);
    REQUIRE(gen.ineq.rhs == 2 * 2 + 1);

    REQUIRE_THROWS_AS(gen_tree_ineq(3, 1), Error);
    REQUIRE_THROWS_AS(gen_tree_ineq(2, 2), Error);
}

TEST_CASE("odd cycle generator pairs all non-adjacent nodes") {
    Generated gen = gen_odd_cycle(5);
    REQUIRE(gen.instance.graph.edge_count() == 5);
    REQUIRE(gen.instance.pairs.size() == 5);
    for (const NodePair& p : gen.instance.pairs) {
        int dist = std::min(p.b - p.a, 5 - (p.b - p.a));
        REQUIRE(dist >= 2);
    }
    REQUIRE(gen.ineq.rhs == 3);
    REQUIRE_THROWS_AS(gen_odd_cycle(4), Error);
    REQUIRE_THROWS_AS(gen_odd_cycle(3), Error);
}

TEST_CASE("Wagner coefficients alternate and pair antipodally") {
    Generated gen = gen_wagner(5, 2);
    const Graph& g = gen.instance.graph;
    REQUIRE(g.node_count == 10);
    REQUIRE(gen.instance.pairs.size() == 5);
    for (const NodePair& p : gen.instance.pairs) REQUIRE(p.b - p.a == 5);
    for (int i = 0; i < 10; ++i) {
        Int ci = gen.ineq.coeffs[edge_index(g, i, (i + 1) % 10)];
        Int opposite = gen.ineq.coeffs[edge_index(g, (i + 5) % 10, (i + 6) % 10)];
        REQUIRE(ci + opposite == 3);
    }
    REQUIRE(gen.ineq.rhs == 3);
    REQUIRE(gen.ineq.provenance.family == "wagner");
}

TEST_CASE("generalized Wagner blocks follow the breakpoints") {
    Generated gen = gen_generalized_wagner(5, 6, {2, 3, 4, 5, 6}, 1);
    const Graph& g = gen.instance.graph;
    REQUIRE(g.node_count == 12);
    std::vector<Int> walk;
    for (int i = 0; i < 12; ++i) walk.push_back(gen.ineq.coeffs[edge_index(g, i, (i + 1) % 12)]);
    REQUIRE(walk == std::vector<Int>{1, 1, 2, 1, 2, 1, 2, 2, 1, 2, 1, 2});

    REQUIRE_THROWS_AS(gen_generalized_wagner(5, 6, {3, 2, 4, 5, 6}, 1), Error);
    REQUIRE_THROWS_AS(gen_generalized_wagner(5, 6, {2, 3, 4, 5}, 1), Error);
    REQUIRE_THROWS_AS(gen_generalized_wagner(4, 6, {2, 3, 5, 6}, 1), Error);
    REQUIRE_THROWS_AS(gen_wagner(5, 3), Error);
}

TEST_CASE("evaluate over points and edge sets") {
    LinearInequality q = make_inequality({Int(1), Int(2)}, Int(2));
    REQUIRE(evaluate(q, std::vector<Rat>{Rat(1, 2), Rat(3, 4)}) == Rat(2));
    REQUIRE(evaluate(q, EdgeSet::of({1})) == 2);
    REQUIRE_THROWS_AS(evaluate(q, std::vector<Rat>{Rat(1)}), Error);
}

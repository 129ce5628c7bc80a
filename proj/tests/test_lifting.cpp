#include <catch2/catch_amalgamated.hpp>

#include "mcd/facet.hpp"
#include "mcd/lifting.hpp"

using namespace mcd;

namespace {

/// Complete 3-star embedded as the first four nodes of a larger host with
/// one extra node hanging off the center.
MulticutInstance star_in_host(std::vector<NodePair> pairs) {
    return build_instance(build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), std::move(pairs));
}

} // namespace

TEST_CASE("zero lifting into a supergraph") {
    Generated gen = gen_complete_star(3);

    SECTION("pairs preserved: facet transfers") {
        MulticutInstance host = star_in_host({{1, 2}, {1, 3}, {2, 3}});
        LiftResult res = lift_zero(gen.instance, gen.ineq, host);
        REQUIRE(res.hypotheses_ok);
        REQUIRE(res.ineq.coeffs == std::vector<Int>{1, 1, 1, 0});
        REQUIRE(res.ineq.rhs == 2);
        REQUIRE(is_facet(res.instance, res.ineq));
        REQUIRE(res.shared_hypotheses_ok);
    }

    SECTION("extra pair inside the subgraph voids the hypothesis") {
        MulticutInstance host = star_in_host({{1, 2}, {1, 3}, {2, 3}, {0, 1}});
        LiftResult res = lift_zero(gen.instance, gen.ineq, host);
        REQUIRE(!res.hypotheses_ok);
        REQUIRE(!res.notes.empty());
    }

    SECTION("missing pair in the target is an error") {
        MulticutInstance host = star_in_host({{1, 2}, {1, 3}});
        REQUIRE_THROWS_AS(lift_zero(gen.instance, gen.ineq, host), Error);
    }

    SECTION("missing edge in the target is an error") {
        MulticutInstance host =
            build_instance(build_graph(4, {{0, 1}, {0, 2}, {1, 3}}), {{1, 2}});
        REQUIRE_THROWS_AS(lift_zero(gen.instance, gen.ineq, host), Error);
    }
}

TEST_CASE("restriction to the support inverts zero lifting") {
    Generated gen = gen_complete_star(3);
    MulticutInstance host = star_in_host({{1, 2}, {1, 3}, {2, 3}});
    LiftResult lifted = lift_zero(gen.instance, gen.ineq, host);

    LiftResult back = restrict_to_support(lifted.instance, lifted.ineq);
    REQUIRE(back.instance.graph.edges == gen.instance.graph.edges);
    REQUIRE(back.instance.pairs == gen.instance.pairs);
    REQUIRE(back.ineq == gen.ineq);

    // Restriction demands facetness.
    LinearInequality weak = make_inequality({Int(1), Int(1), Int(1), Int(0)}, Int(1));
    try {
        restrict_to_support(host, weak);
        FAIL("restriction accepted a non-facet");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::not_a_facet);
    }
}

TEST_CASE("node split bookkeeping") {
    Generated gen = gen_complete_star(3);
    std::map<int, int> sides{{0, 1}};

    SECTION("default keeps both pair copies") {
        // With both copies kept, the reduced graph (new edge removed, node 4
        // isolated) still carries all three original pairs, so omega is the
        // full claw minimum of 2 and the new edge gets rhs - omega = 0: the
        // old row is already valid without it.
        LiftResult res = lift_node_split(gen.instance, gen.ineq, 1, sides);
        REQUIRE(res.omega.has_value());
        REQUIRE(*res.omega == 2);
        REQUIRE(res.ineq.rhs == 2);
        REQUIRE(res.ineq.coeffs[res.new_edge] == 0);
        REQUIRE(res.instance.pairs.size() == 5);
    }

    SECTION("replacement choices prune the pair set") {
        std::map<int, PairChoice> repl{{2, {false, true}}, {3, {true, false}}};
        LiftResult res = lift_node_split(gen.instance, gen.ineq, 1, sides, repl);
        REQUIRE(res.instance.pairs.size() == 3);
        REQUIRE(is_facet(res.instance, res.ineq));
    }

    SECTION("replacement for a non-pair is rejected") {
        std::map<int, PairChoice> repl{{0, {true, false}}};
        REQUIRE_THROWS_AS(lift_node_split(gen.instance, gen.ineq, 1, sides, repl), Error);
    }

    SECTION("splitting outside the support is rejected") {
        LinearInequality sparse = make_inequality({Int(0), Int(1), Int(1)}, Int(1));
        try {
            lift_node_split(gen.instance, sparse, 1, sides);
            FAIL("node without support edges accepted");
        } catch (const Error& e) {
            REQUIRE(e.code() == errc::node_not_in_support);
        }
    }
}

TEST_CASE("contraction guards its hypotheses") {
    Generated gen = gen_complete_star(3);
    LiftResult sub = lift_subdivide(gen.instance, gen.ineq, 0, 3);
    const std::vector<int>& path_edges = sub.map.edge_map[0];
    REQUIRE(path_edges.size() == 3);

    SECTION("attachment must be only at s and t") {
        std::vector<int> partial{path_edges[0], path_edges[1]};
        try {
            contract_subgraph_to_edge(sub.instance, sub.ineq, partial, 0, 1);
            FAIL("dangling attachment accepted");
        } catch (const Error& e) {
            REQUIRE(e.code() == errc::bad_attachment);
        }
    }

    SECTION("no terminal strictly inside H") {
        MulticutInstance pinned = build_instance(
            sub.instance.graph,
            [&] {
                std::vector<NodePair> pairs = sub.instance.pairs;
                pairs.push_back(make_pair_canonical(sub.new_node, 2));
                return pairs;
            }());
        try {
            contract_subgraph_to_edge(pinned, sub.ineq, path_edges, 0, 1);
            FAIL("terminal inside H accepted");
        } catch (const Error& e) {
            REQUIRE(e.code() == errc::terminal_inside);
        }
    }

    SECTION("round trip restores the generator") {
        LiftResult back = contract_subgraph_to_edge(sub.instance, sub.ineq, path_edges, 0, 1);
        REQUIRE(*back.omega == 1);
        REQUIRE(back.instance.graph.edges == gen.instance.graph.edges);
        REQUIRE(back.ineq == gen.ineq);
    }
}

TEST_CASE("subdivision multiplies edges, not the right-hand side") {
    Generated gen = gen_circular_star(5);
    LiftResult res = lift_subdivide(gen.instance, gen.ineq, 2, 4);
    REQUIRE(res.instance.graph.edge_count() == 8);
    REQUIRE(res.ineq.rhs == gen.ineq.rhs);
    int ones = 0;
    for (const Int& c : res.ineq.coeffs) ones += c == 1;
    REQUIRE(ones == 8);
    REQUIRE(is_facet(res.instance, res.ineq));
}

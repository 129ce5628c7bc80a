#include <catch2/catch_amalgamated.hpp>

#include "mcd/rng.hpp"
#include "mcd/solver.hpp"
#include "oracles.hpp"

using namespace mcd;

TEST_CASE("solver on hand instances") {
    // Path with a cheap middle edge.
    MulticutInstance path =
        build_instance(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}), {{0, 3}});
    SolveResult res = solve_min_multicut(path, {Rat(5), Rat(2), Rat(4)});
    REQUIRE(res.value == 2);
    REQUIRE(res.cut == EdgeSet::of({1}));

    // Complete 3-star with rational weights: drop the two cheap spokes.
    Generated star = gen_complete_star(3);
    SolveResult star_res =
        solve_min_multicut(star.instance, {Rat(1, 2), Rat(7, 3), Rat(5, 6)});
    REQUIRE(star_res.value == Rat(1, 2) + Rat(5, 6));
    REQUIRE(star_res.cut == EdgeSet::of({0, 2}));
}

TEST_CASE("solver equals the subset scan on random weighted instances") {
    Rng rng(501);
    for (int trial = 0; trial < 25; ++trial) {
        MulticutInstance inst = random_instance(rng, 6, 10, 3);
        WeightVector w = random_weights(rng, inst.graph.edge_count(), 10);
        SolveResult res = solve_min_multicut(inst, w);
        REQUIRE(res.value == oracles::min_multicut_value(inst, w));
        REQUIRE(oracles::is_multicut(inst, res.cut));
    }
}

TEST_CASE("single-pair instances reduce to minimum s-t cuts") {
    Rng rng(502);
    for (int trial = 0; trial < 15; ++trial) {
        MulticutInstance inst = random_instance(rng, 7, 11, 1);
        WeightVector w = random_weights(rng, inst.graph.edge_count(), 8);
        MinCutResult flow = min_st_cut(inst.graph, w, inst.pairs[0].a, inst.pairs[0].b);
        REQUIRE(solve_min_multicut(inst, w).value == flow.value);
    }
}

TEST_CASE("solves are deterministic, stats included") {
    Generated gen = gen_wagner(5, 1);
    WeightVector alt(10, Rat(0));
    for (int i = 0; i < 10; ++i)
        alt[edge_index(gen.instance.graph, i, (i + 1) % 10)] = Rat(i % 2 ? 1 : 2);

    SolveResult a = solve_min_multicut(gen.instance, alt);
    SolveResult b = solve_min_multicut(gen.instance, alt);
    REQUIRE(a.value == b.value);
    REQUIRE(a.cut == b.cut);
    REQUIRE(a.stats.lp_solves == b.stats.lp_solves);
    REQUIRE(a.stats.lp_pivots == b.stats.lp_pivots);
    REQUIRE(a.stats.branch_nodes == b.stats.branch_nodes);
    REQUIRE(a.stats.cuts_added == b.stats.cuts_added);
    REQUIRE(a.stats.final_bound == a.value);
}

TEST_CASE("family cuts can be disabled") {
    Generated gen = gen_complete_star(3);
    SolverConfig no_trees;
    no_trees.tree_families = false;
    SolveResult res = solve_min_multicut(gen.instance, WeightVector(3, Rat(1)), no_trees);
    REQUIRE(res.value == 2);
}

TEST_CASE("lower bounds grow with the separation families") {
    Generated gen = gen_tree_ineq(3, 2);
    WeightVector w(gen.instance.graph.edge_count(), Rat(1));
    Rat paths = lower_bound_report(gen.instance, w, {"edge", "path"});
    Rat trees = lower_bound_report(gen.instance, w, {"edge", "path", "tree"});
    REQUIRE(paths <= trees);
    REQUIRE(trees <= solve_min_multicut(gen.instance, w).value);
}

TEST_CASE("weights must be nonnegative and complete") {
    MulticutInstance inst = build_instance(build_graph(2, {{0, 1}}), {{0, 1}});
    REQUIRE_THROWS_AS(solve_min_multicut(inst, {Rat(-1)}), Error);
    REQUIRE_THROWS_AS(solve_min_multicut(inst, WeightVector{}), Error);
}

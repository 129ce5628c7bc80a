#include <catch2/catch_amalgamated.hpp>

#include "mcd/facet.hpp"
#include "mcd/hull.hpp"
#include "mcd/lifting.hpp"
#include "mcd/separation.hpp"
#include "mcd/simplex.hpp"
#include "mcd/solver.hpp"

using namespace mcd;

TEST_CASE("smoke: K_2 with one pair") {
    MulticutInstance inst = build_instance(build_graph(2, {{0, 1}}), {{0, 1}});
    auto cuts = enumerate_minimal_multicuts(inst);
    REQUIRE(cuts.size() == 1);
    REQUIRE(cuts[0] == EdgeSet::of({0}));

    HRepresentation hrep = dominant_hrep(inst);
    REQUIRE(hrep.facets.size() == 1);
    REQUIRE(hrep.facets[0].coeffs == std::vector<Int>{1});
    REQUIRE(hrep.facets[0].rhs == 1);

    SolveResult sol = solve_min_multicut(inst, {Rat(7)});
    REQUIRE(sol.value == 7);
}

TEST_CASE("smoke: complete 3-star facets and hull") {
    Generated gen = gen_complete_star(3);
    REQUIRE(is_facet(gen.instance, gen.ineq));
    REQUIRE(is_shared_facet(gen.instance, gen.ineq));

    HRepresentation hrep = dominant_hrep(gen.instance);
    CAPTURE(hrep.facets.size());
    bool found = false;
    for (const auto& f : hrep.facets) found = found || f == gen.ineq;
    REQUIRE(found);

    // LP bound: fractional optimum of the path relaxation sits at 3/2.
    Rat paths_only = lower_bound_report(gen.instance, WeightVector(3, Rat(1)), {"edge", "path"});
    REQUIRE(paths_only == Rat(3, 2));
    Rat with_star = lower_bound_report(gen.instance, WeightVector(3, Rat(1)),
                                       {"edge", "path", "star"});
    REQUIRE(with_star == 2);

    SolveResult sol = solve_min_multicut(gen.instance, WeightVector(3, Rat(1)));
    REQUIRE(sol.value == 2);
}

TEST_CASE("smoke: C_10 Wagner solve and bounds") {
    Generated gen = gen_wagner(5, 1);
    REQUIRE(is_facet(gen.instance, gen.ineq));

    // Unit weights: the two arc rows per pair already force the LP to the
    // integer optimum 2 (x = 1/5 uniform is optimal), Wagner rows keep it.
    WeightVector unit(10, Rat(1));
    REQUIRE(lower_bound_report(gen.instance, unit, {"edge", "path"}) == 2);
    REQUIRE(lower_bound_report(gen.instance, unit, {"edge", "path", "wagner"}) == 2);

    // Alternating weights expose the family's strength: paths leave a gap,
    // one Wagner variant closes it.
    WeightVector alt(10, Rat(0));
    for (int i = 0; i < 10; ++i)
        alt[edge_index(gen.instance.graph, i, (i + 1) % 10)] = Rat(i % 2 ? 1 : 2);
    Rat paths = lower_bound_report(gen.instance, alt, {"edge", "path"});
    Rat wagner = lower_bound_report(gen.instance, alt, {"edge", "path", "wagner"});
    REQUIRE(paths < 3);
    REQUIRE(wagner == 3);
    REQUIRE(solve_min_multicut(gen.instance, alt).value == 3);

    SolveResult sol = solve_min_multicut(gen.instance, unit);
    REQUIRE(sol.value == 2);
    REQUIRE(sol.cut.size() == 2);
}

TEST_CASE("smoke: splitted 3-claw first step") {
    Generated gen = gen_complete_star(3);
    // Split leaf 1 (= s): the spoke stays at s, nothing moves to s_1; the
    // pair {1,2} goes to s_1 while {1,3} stays.
    std::map<int, int> sides{{0, 1}};
    std::map<int, PairChoice> repl{{2, PairChoice{false, true}}, {3, PairChoice{true, false}}};
    LiftResult lifted = lift_node_split(gen.instance, gen.ineq, 1, sides, repl);
    REQUIRE(lifted.omega.has_value());
    REQUIRE(*lifted.omega == 1);
    REQUIRE(lifted.ineq.coeffs == std::vector<Int>(4, 1));
    REQUIRE(lifted.ineq.rhs == 2);
    REQUIRE(is_facet(lifted.instance, lifted.ineq));
}

TEST_CASE("smoke: subdivision round trip") {
    Generated gen = gen_complete_star(3);
    LiftResult sub = lift_subdivide(gen.instance, gen.ineq, 0, 2);
    REQUIRE(sub.ineq.rhs == 2);
    REQUIRE(is_facet(sub.instance, sub.ineq));
    LiftResult back = contract_subgraph_to_edge(sub.instance, sub.ineq, sub.map.edge_map[0], 0, 1);
    REQUIRE(back.omega.has_value());
    REQUIRE(*back.omega == 1);
    REQUIRE(back.instance.graph.edges == gen.instance.graph.edges);
    REQUIRE(back.instance.pairs == gen.instance.pairs);
    REQUIRE(back.ineq == gen.ineq);
}

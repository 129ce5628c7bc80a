#include <catch2/catch_amalgamated.hpp>

#include "mcd/inequality.hpp"
#include "mcd/multicut.hpp"
#include "mcd/rng.hpp"
#include "oracles.hpp"

using namespace mcd;

namespace {

MulticutInstance path_instance() {
    // s - a - t with the single pair {s, t}.
    return build_instance(build_graph(3, {{0, 1}, {1, 2}}), {{0, 2}});
}

} // namespace

TEST_CASE("is_multicut and minimality on a path") {
    MulticutInstance inst = path_instance();
    REQUIRE(is_multicut(inst, EdgeSet::of({0})));
    REQUIRE(is_multicut(inst, EdgeSet::of({0, 1})));
    REQUIRE(!is_multicut(inst, EdgeSet{}));
    REQUIRE(is_minimal_multicut(inst, EdgeSet::of({1})));
    REQUIRE(!is_minimal_multicut(inst, EdgeSet::of({0, 1})));
}

TEST_CASE("pairs already disconnected are satisfied automatically") {
    MulticutInstance inst = build_instance(build_graph(4, {{0, 1}, {2, 3}}), {{0, 2}, {0, 1}});
    REQUIRE(is_multicut(inst, EdgeSet::of({0})));
    auto cuts = enumerate_minimal_multicuts(inst);
    REQUIRE(cuts == std::vector<EdgeSet>{EdgeSet::of({0})});
}

TEST_CASE("minimal multicuts of the complete 3-star") {
    Generated gen = gen_complete_star(3);
    auto cuts = enumerate_minimal_multicuts(gen.instance);
    REQUIRE(cuts.size() == 3);
    for (const EdgeSet& c : cuts) REQUIRE(c.size() == 2);
    REQUIRE(std::is_sorted(cuts.begin(), cuts.end(), lex_less));
}

TEST_CASE("enumeration matches the subset filter on small random instances") {
    Rng rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        MulticutInstance inst = random_instance(rng, 6, 9, 2);
        REQUIRE(enumerate_minimal_multicuts(inst) == oracles::minimal_multicuts(inst));
    }
}

TEST_CASE("enumeration budget guard") {
    // 2^|E| above the cap must refuse rather than run.
    Generated gen = gen_wagner(5, 1);
    Budget tiny;
    tiny.max_partitions = 10;
    try {
        enumerate_minimal_multicuts(gen.instance, tiny);
        FAIL("budget guard did not trigger");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::budget_exceeded);
    }
}

TEST_CASE("min_st_cut on a weighted diamond") {
    // Two disjoint s-t routes; cheapest cut takes the light edge of each.
    Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    WeightVector w{Rat(1), Rat(3), Rat(4), Rat(2)};
    MinCutResult cut = min_st_cut(g, w, 0, 3);
    REQUIRE(cut.value == 3);
    REQUIRE(cut.cut == EdgeSet::of({0, 3}));
}

TEST_CASE("min_multicut_bruteforce agrees with the subset scan") {
    Rng rng(78);
    for (int trial = 0; trial < 10; ++trial) {
        MulticutInstance inst = random_instance(rng, 6, 9, 2);
        WeightVector w = random_weights(rng, inst.graph.edge_count(), 6);
        REQUIRE(min_multicut_bruteforce(inst, w).value == oracles::min_multicut_value(inst, w));
    }
}

TEST_CASE("bruteforce result is a minimal multicut with lexicographic ties") {
    MulticutInstance inst = path_instance();
    MinCutResult cut = min_multicut_bruteforce(inst, WeightVector(2, Rat(1)));
    REQUIRE(cut.value == 1);
    REQUIRE(cut.cut == EdgeSet::of({0}));
}

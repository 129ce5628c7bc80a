#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "mcd/checks.hpp"

using namespace mcd;

TEST_CASE("registry names are unique and described") {
    const auto& defs = detail::check_registry();
    REQUIRE(defs.size() == 14);
    std::set<std::string> names;
    for (const auto& def : defs) {
        REQUIRE(names.insert(def.name).second);
        REQUIRE_FALSE(def.description.empty());
        REQUIRE(def.run != nullptr);
    }
    ReproduceManifest m = default_manifest();
    REQUIRE(m.entries.size() == defs.size());
    for (std::size_t i = 0; i < defs.size(); ++i) {
        REQUIRE(m.entries[i].name == defs[i].name);
        REQUIRE(m.entries[i].expect_pass);
        REQUIRE(m.entries[i].params.empty());
    }
}

TEST_CASE("substring filter selects in manifest order") {
    RunReport rep = run_reproduce(default_manifest(), "wagner");
    REQUIRE(rep.results.size() == 2);
    REQUIRE(rep.results[0].name == "wagner");
    REQUIRE(rep.results[1].name == "generalized-wagner");
    REQUIRE(rep.results[0].pass);
    REQUIRE(rep.results[1].pass);
    REQUIRE(rep.results[1].detail.find("derivation matches") != std::string::npos);
    REQUIRE(rep.exit_code() == 0);

    REQUIRE(run_reproduce(default_manifest(), "no-such-check").results.empty());
}

TEST_CASE("parameters tune the workload") {
    ReproduceManifest m;
    m.entries.push_back({"stcut-dominant", {{"graphs", 3}}, true});
    RunReport rep = run_reproduce(m);
    REQUIRE(rep.results.size() == 1);
    REQUIRE(rep.results[0].pass);
    REQUIRE(rep.results[0].detail.find("all 3 single-pair dominants") != std::string::npos);
}

TEST_CASE("falsified parameters flip the verdict as announced") {
    // Claiming rhs 4 for the Wagner row must fail; the manifest records that
    // expectation, so the run as a whole is still as expected.
    ReproduceManifest m;
    m.entries.push_back({"wagner", {{"rhs", 4}}, false});
    RunReport rep = run_reproduce(m);
    REQUIRE(rep.results.size() == 1);
    REQUIRE_FALSE(rep.results[0].pass);
    REQUIRE(rep.results[0].as_expected());
    REQUIRE(rep.results[0].detail.find("expected rhs 4") != std::string::npos);
    REQUIRE(rep.exit_code() == 0);

    m.entries[0].expect_pass = true;
    RunReport strict = run_reproduce(m);
    REQUIRE_FALSE(strict.results[0].as_expected());
    REQUIRE(strict.exit_code() == 1);

    ReproduceManifest star;
    star.entries.push_back({"complete-star", {{"rhs_offset", 0}}, false});
    REQUIRE(run_reproduce(star).exit_code() == 0);
}

TEST_CASE("unknown check names fail loudly") {
    ReproduceManifest m;
    m.entries.push_back({"no-such-check", {}, true});
    RunReport rep = run_reproduce(m);
    REQUIRE(rep.results.size() == 1);
    REQUIRE_FALSE(rep.results[0].pass);
    REQUIRE(rep.results[0].detail.find("unknown check") != std::string::npos);
    REQUIRE(rep.exit_code() == 1);
}

TEST_CASE("results keep manifest order under parallel execution") {
    ReproduceManifest m;
    m.entries.push_back({"complete-star", {}, true});
    m.entries.push_back({"wagner", {}, true});
    m.entries.push_back({"circular-star", {}, true});
    RunReport rep = run_reproduce(m, "", 3);
    REQUIRE(rep.results.size() == 3);
    REQUIRE(rep.results[0].name == "complete-star");
    REQUIRE(rep.results[1].name == "wagner");
    REQUIRE(rep.results[2].name == "circular-star");
    REQUIRE(rep.all_as_expected());
}

TEST_CASE("single and multi threaded runs agree") {
    RunReport a = run_reproduce(default_manifest(), "", 1);
    RunReport b = run_reproduce(default_manifest(), "", 4);
    REQUIRE(a.all_as_expected());
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        REQUIRE(a.results[i].name == b.results[i].name);
        REQUIRE(a.results[i].description == b.results[i].description);
        REQUIRE(a.results[i].pass == b.results[i].pass);
        REQUIRE(a.results[i].detail == b.results[i].detail);
    }
}

TEST_CASE("budget refusals are inconclusive, not failures") {
    ReproduceManifest m;
    m.entries.push_back({"tree-facets", {}, true});
    m.budget.max_partitions = 50;
    RunReport rep = run_reproduce(m);
    REQUIRE(rep.results.size() == 1);
    REQUIRE_FALSE(rep.results[0].pass);
    REQUIRE(rep.results[0].budget_exceeded);
    REQUIRE(rep.any_budget_exceeded());
    REQUIRE(rep.exit_code() == 3);
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "mcd/io.hpp"

using namespace mcd;

namespace {

/// Writes text to a scratch file and returns its path.
class TempFile {
  public:
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path_ = "mcd-io-test-" + std::to_string(counter++) + ".tmp";
        std::ofstream out(path_);
        out << text;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

std::string error_text(const std::string& content, bool instance = true) {
    TempFile f(content);
    try {
        if (instance)
            parse_instance_file(f.path());
        else
            parse_inequality_file(f.path());
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::parse_error);
        return e.what();
    }
    FAIL("no parse error raised");
    return "";
}

} // namespace

TEST_CASE("parse the shipped claw fixture") {
    ParsedInstance in = parse_instance_file(MCD_FIXTURE_DIR "/k13-complete.mc");
    REQUIRE(in.instance.graph.node_count == 4);
    REQUIRE(in.instance.graph.edge_count() == 3);
    REQUIRE(in.instance.pairs.size() == 3);
    REQUIRE(in.weights == WeightVector(3, Rat(1)));

    LinearInequality q = parse_inequality_file(MCD_FIXTURE_DIR "/k13-complete.ineq");
    REQUIRE(q.coeffs == std::vector<Int>(3, 1));
    REQUIRE(q.rhs == 2);
}

TEST_CASE("instance round trip with rational weights") {
    TempFile f("nodes 3\nedge 0 1 7/2\nedge 1 2\npair 0 2\n");
    ParsedInstance in = parse_instance_file(f.path());
    REQUIRE(in.weights == WeightVector{Rat(7, 2), Rat(1)});

    std::string printed = print_instance(in.instance, in.weights);
    TempFile again(printed);
    ParsedInstance back = parse_instance_file(again.path());
    REQUIRE(back.instance.graph.edges == in.instance.graph.edges);
    REQUIRE(back.instance.pairs == in.instance.pairs);
    REQUIRE(back.weights == in.weights);
    REQUIRE(print_instance(back.instance, back.weights) == printed);
}

TEST_CASE("weights follow the canonical edge order, not file order") {
    // Edges given in reverse lexicographic order: the weight must stick to
    // the edge it annotates.
    TempFile f("nodes 3\nedge 1 2 5\nedge 0 1 3\npair 0 2\n");
    ParsedInstance in = parse_instance_file(f.path());
    REQUIRE(in.instance.graph.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    REQUIRE(in.weights == WeightVector{Rat(3), Rat(5)});
}

TEST_CASE("instance parse errors carry line numbers") {
    REQUIRE(error_text("nodes 3\nedge 0 1\npair 1 1\n").find(":3:") != std::string::npos);
    REQUIRE(error_text("edge 0 1\n").find(":1:") != std::string::npos);
    REQUIRE(error_text("nodes 2\nedge 0 2\n").find(":2:") != std::string::npos);
    REQUIRE(error_text("nodes 2\nedge 0 1\nedge 1 0\n").find(":3:") != std::string::npos);
    REQUIRE(error_text("nodes 2\nedge 0 1 -2\n").find(":2:") != std::string::npos);
    REQUIRE(error_text("nodes 2\nedge 0 1\nwall 0 1\n").find(":3:") != std::string::npos);
    REQUIRE(error_text("nodes 2\nnodes 2\n").find(":2:") != std::string::npos);
}

TEST_CASE("inequality files demand integers") {
    TempFile ok("# comment\nineq 2 <= 1 1 1\n");
    LinearInequality q = parse_inequality_file(ok.path());
    REQUIRE(q.rhs == 2);

    REQUIRE(error_text("ineq 2 <= 1 1/2 1\n", false).find("1/2") != std::string::npos);
    REQUIRE(error_text("ineq 2.0 <= 1 1 1\n", false) != "");
    REQUIRE(error_text("ineq 2 < 1 1 1\n", false) != "");
    REQUIRE(error_text("\n# only comments\n", false) != "");
}

TEST_CASE("multi-row inequality files and points") {
    TempFile rows("ineq 1 <= 1 0\nineq 0 <= 0 1 # bound\n\nineq 1 <= 1 1\n");
    std::vector<LinearInequality> qs = parse_inequalities_file(rows.path());
    REQUIRE(qs.size() == 3);
    REQUIRE(qs[1].coeffs == std::vector<Int>{0, 1});

    TempFile pt("1/2\n0\n2\n");
    RatVec x = parse_point_file(pt.path());
    REQUIRE(x == RatVec{Rat(1, 2), Rat(0), Rat(2)});
}

TEST_CASE("printing omits unit weights and keeps exact fractions") {
    MulticutInstance inst = build_instance(build_graph(3, {{0, 1}, {1, 2}}), {{0, 2}});
    std::string text = print_instance(inst, {Rat(1), Rat(22, 7)});
    REQUIRE(text.find("edge 0 1\n") != std::string::npos);
    REQUIRE(text.find("edge 1 2 22/7\n") != std::string::npos);

    LinearInequality q = make_inequality({Int(2), Int(0)}, Int(1));
    REQUIRE(print_inequality(q) == "ineq 1 <= 2 0\n");
}

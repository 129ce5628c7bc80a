/// mcd: exact minimum multicuts and the facial structure of the multicut
/// dominant, in one binary. Nine subcommands (solve, enum-multicuts, facets,
/// check-ineq, check-description, gen-ineq, separate, lift, reproduce); all
/// numeric output is exact p/q. Exit codes: 0 success or PASS, 1 FAIL,
/// 2 usage or parse error, 3 budget exceeded.

#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "mcd/checks.hpp"
#include "mcd/classify.hpp"
#include "mcd/hull.hpp"
#include "mcd/io.hpp"
#include "mcd/lifting.hpp"
#include "mcd/separation.hpp"
#include "mcd/solver.hpp"

namespace {

using namespace mcd;

/// Resource limits shared by every subcommand, settable through the global
/// flags. --budget scales the partition cap; the finer limits have their own
/// flags because they guard different algorithms.
struct Limits {
    long long partitions = Budget{}.max_partitions;
    int hull_edges = Budget{}.max_hull_edges;
    long long hull_generators = Budget{}.max_hull_generators;
    int family_size = Budget{}.max_family_size;
    int threads = 1;

    Budget budget() const {
        Budget b;
        b.max_partitions = partitions;
        b.max_hull_edges = hull_edges;
        b.max_hull_generators = hull_generators;
        b.max_family_size = family_size;
        return b;
    }
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    for (const std::string& tok : split_csv(text)) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) fail(errc::parse_error, what + ": '" + tok + "' is not an integer");
        out.push_back(value);
    }
    return out;
}

std::string edge_list_line(const std::vector<int>& edges) {
    std::string out;
    for (int e : edges) {
        if (!out.empty()) out += " ";
        out += std::to_string(e);
    }
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(errc::parse_error, path + ": cannot open for writing");
    out << text;
    if (!out) fail(errc::parse_error, path + ": write failed");
}

/// One inequality per line without the trailing newline, for composing
/// annotated output lines.
std::string inequality_line(const LinearInequality& q) {
    std::string line = print_inequality(q);
    while (!line.empty() && line.back() == '\n') line.pop_back();
    return line;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
    std::string instance;
    std::string families = "path,star,tree";
    std::string oracle = "none";
    bool stats = false;
};

int run_solve(const SolveArgs& args, const Limits& limits) {
    ParsedInstance in = parse_instance_file(args.instance);

    std::set<std::string> families;
    for (const std::string& f : split_csv(args.families)) {
        if (f != "path" && f != "star" && f != "tree")
            fail(errc::parse_error, "unknown family '" + f + "' (use path, star, tree)");
        families.insert(f);
    }
    if (!families.count("path"))
        fail(errc::parse_error, "the path family cannot be disabled; bounds need it");

    SolverConfig config;
    config.budget = limits.budget();
    config.tree_families = families.count("star") || families.count("tree");

    SolveResult res = solve_min_multicut(in.instance, in.weights, config);
    std::cout << "value " << rat_to_string(res.value) << "\n";
    std::cout << "cut " << edge_list_line(res.cut.indices()) << "\n";

    if (args.stats) {
        std::cout << "lp-solves " << res.stats.lp_solves << "\n";
        std::cout << "lp-pivots " << res.stats.lp_pivots << "\n";
        std::cout << "branch-nodes " << res.stats.branch_nodes << "\n";
        for (const auto& [family, count] : res.stats.cuts_added)
            std::cout << "cuts " << family << " " << count << "\n";
        std::cout << "bound " << rat_to_string(res.stats.final_bound) << "\n";
    }

    if (args.oracle == "brute") {
        MinCutResult want = min_multicut_bruteforce(in.instance, in.weights, limits.budget());
        if (want.value != res.value) {
            std::cout << "oracle brute disagrees: " << rat_to_string(want.value) << "\n";
            return 1;
        }
        std::cout << "oracle brute agrees\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// enum-multicuts

int run_enum(const std::string& path, const Limits& limits) {
    ParsedInstance in = parse_instance_file(path);
    for (const EdgeSet& cut : enumerate_minimal_multicuts(in.instance, limits.budget()))
        std::cout << edge_list_line(cut.indices()) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// facets

int run_facets(const std::string& path, bool classify, const Limits& limits) {
    ParsedInstance in = parse_instance_file(path);
    HRepresentation h = dominant_hrep(in.instance, limits.budget());
    for (const LinearInequality& facet : h.facets) {
        if (classify) std::cout << "# " << classify_facet(in.instance, facet).to_string() << "\n";
        std::cout << print_inequality(facet);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check-ineq

struct CheckIneqArgs {
    std::string instance;
    std::string inequality;
    bool shared = false;
};

int run_check_ineq(const CheckIneqArgs& args, const Limits& limits) {
    ParsedInstance in = parse_instance_file(args.instance);
    LinearInequality q = parse_inequality_file(args.inequality);

    FacetReport rep = facet_report(in.instance, q, args.shared, limits.budget());
    std::cout << "inequality " << pretty_inequality(q) << "\n";
    std::cout << "valid " << (rep.validity.valid ? "yes" : "no") << "\n";
    if (rep.validity.negative_edge)
        std::cout << "  negative coefficient on edge " << *rep.validity.negative_edge << "\n";
    if (rep.validity.violating_multicut)
        std::cout << "  violated by minimal multicut "
                  << edge_list_line(rep.validity.violating_multicut->indices()) << "\n";
    if (rep.validity.valid) {
        std::cout << "tight-vertices " << rep.tight_vertex_count << "\n";
        std::cout << "face-dim " << rep.face_dim << " of " << in.instance.graph.edge_count()
                  << "\n";
        std::cout << "facet " << (rep.facet ? "yes" : "no") << "\n";
        if (rep.shared) std::cout << "shared " << (*rep.shared ? "yes" : "no") << "\n";
        std::cout << "bounded " << (rep.bounded ? "yes" : "no") << "\n";
        std::cout << "structural " << (rep.structural.pass ? "pass" : "fail") << "\n";
        for (const std::string& v : rep.structural.violations) std::cout << "  " << v << "\n";
    }
    return rep.facet ? 0 : 1;
}

// ---------------------------------------------------------------------------
// check-description

int run_check_description(const std::string& instance_path, const std::string& ineq_path,
                          const Limits& limits) {
    ParsedInstance in = parse_instance_file(instance_path);
    std::vector<LinearInequality> candidates = parse_inequalities_file(ineq_path);

    DescriptionReport rep = check_complete_description(in.instance, candidates, limits.budget());
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    std::cout << "facets " << rep.hrep.facets.size() << "\n";
    std::cout << "candidates " << candidates.size() << "\n";
    for (const LinearInequality& q : rep.missing_facets)
        std::cout << "missing-facet " << inequality_line(q) << "\n";
    for (std::size_t i : rep.invalid_candidates)
        std::cout << "invalid-candidate " << i << " " << inequality_line(candidates[i]) << "\n";
    for (std::size_t i : rep.redundant_candidates)
        std::cout << "redundant-candidate " << i << " " << inequality_line(candidates[i]) << "\n";
    return rep.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gen-ineq

struct GenArgs {
    std::string family;
    int n = 0;
    int k = 0;
    int cap = 0;
    int beta = 1;
    std::string breakpoints;
    std::string output;
};

int run_gen_ineq(const GenArgs& args, const Limits&) {
    Generated gen;
    std::string prefix = args.output;
    if (args.family == "circular-star") {
        gen = gen_circular_star(args.n);
        if (prefix.empty()) prefix = "circular-star-" + std::to_string(args.n);
    } else if (args.family == "complete-star") {
        gen = gen_complete_star(args.n);
        if (prefix.empty()) prefix = "complete-star-" + std::to_string(args.n);
    } else if (args.family == "tree") {
        gen = gen_tree_ineq(args.n, args.k);
        if (prefix.empty())
            prefix = "tree-" + std::to_string(args.n) + "-" + std::to_string(args.k);
    } else if (args.family == "odd-cycle") {
        gen = gen_odd_cycle(args.n);
        if (prefix.empty()) prefix = "odd-cycle-" + std::to_string(args.n);
    } else if (args.family == "wagner") {
        gen = gen_wagner(args.n, args.beta);
        if (prefix.empty()) prefix = "wagner-" + std::to_string(args.n) + "-b" +
                                     std::to_string(args.beta);
    } else if (args.family == "generalized-wagner") {
        std::vector<int> bp = parse_int_list(args.breakpoints, "--breakpoints");
        gen = gen_generalized_wagner(args.n, args.cap, bp, args.beta);
        if (prefix.empty()) prefix = "generalized-wagner-" + std::to_string(args.n) + "-" +
                                     std::to_string(args.cap) + "-b" + std::to_string(args.beta);
    } else {
        fail(errc::parse_error, "unknown family '" + args.family +
                                    "' (use circular-star, complete-star, tree, odd-cycle, "
                                    "wagner, generalized-wagner)");
    }

    write_file(prefix + ".mc", print_instance(gen.instance));
    write_file(prefix + ".ineq", print_inequality(gen.ineq));
    std::cout << "wrote " << prefix << ".mc\n";
    std::cout << "wrote " << prefix << ".ineq\n";
    std::cout << gen.ineq.provenance.to_string() << ": " << inequality_line(gen.ineq) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// separate

struct SeparateArgs {
    std::string instance;
    std::string point;
    std::string families = "path";
    int k = 3;
    int l = 3;
};

int run_separate(const SeparateArgs& args, const Limits& limits) {
    ParsedInstance in = parse_instance_file(args.instance);
    RatVec x = parse_point_file(args.point);
    if (static_cast<int>(x.size()) != in.instance.graph.edge_count())
        fail(errc::dimension_mismatch,
             args.point + ": " + std::to_string(x.size()) + " coordinates for " +
                 std::to_string(in.instance.graph.edge_count()) + " edges");

    SeparationResult all;
    for (const std::string& f : split_csv(args.families)) {
        SeparationResult part;
        if (f == "path")
            part = separate_paths(in.instance, x);
        else if (f == "star")
            part = separate_stars_on_tree(in.instance, x, args.k, limits.budget());
        else if (f == "tree")
            part = separate_trees_on_tree(in.instance, x, args.l, limits.budget());
        else
            fail(errc::parse_error, "unknown family '" + f + "' (use path, star, tree)");
        for (auto& [q, amount] : part.violated) all.add(std::move(q), std::move(amount));
    }
    all.finish();

    std::cout << "violated " << all.violated.size() << "\n";
    for (const auto& [q, amount] : all.violated)
        std::cout << inequality_line(q) << " # violation " << rat_to_string(amount) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// lift

struct LiftArgs {
    std::string instance;
    std::string inequality;
    std::string op;
    int node = -1;
    std::string to_v2;
    std::string pair_v1;
    std::string pair_v2;
    std::string pair_drop;
    int edge = -1;
    int length = 2;
    std::string edges;
    int s = -1;
    int t = -1;
    std::string output = "lifted";
};

LiftResult run_lift_split(const LiftArgs& args, const MulticutInstance& inst,
                          const LinearInequality& q, const Budget& budget) {
    if (args.node < 0) fail(errc::parse_error, "--op split needs --node");
    if (args.node >= inst.graph.node_count)
        fail(errc::invalid_node, "no node " + std::to_string(args.node));

    std::map<int, int> sides;
    for (auto [nbr, e] : inst.graph.adj[args.node]) sides[e] = 1;
    for (int e : parse_int_list(args.to_v2, "--to-v2")) {
        auto it = sides.find(e);
        if (it == sides.end())
            fail(errc::invalid_edge, "--to-v2: edge " + std::to_string(e) +
                                         " is not incident to node " + std::to_string(args.node));
        it->second = 2;
    }

    std::map<int, PairChoice> replacement;
    for (int t : parse_int_list(args.pair_v1, "--pair-v1")) replacement[t] = {true, false};
    for (int t : parse_int_list(args.pair_v2, "--pair-v2")) {
        auto it = replacement.find(t);
        if (it != replacement.end())
            it->second.to_v2 = true;
        else
            replacement[t] = {false, true};
    }
    for (int t : parse_int_list(args.pair_drop, "--pair-drop")) {
        if (replacement.count(t))
            fail(errc::parse_error,
                 "--pair-drop: terminal " + std::to_string(t) + " also kept by another flag");
        replacement[t] = {false, false};
    }
    return lift_node_split(inst, q, args.node, sides, replacement, budget);
}

int run_lift(const LiftArgs& args, const Limits& limits) {
    ParsedInstance in = parse_instance_file(args.instance);
    LinearInequality q = parse_inequality_file(args.inequality);
    Budget budget = limits.budget();

    LiftResult res;
    if (args.op == "split") {
        res = run_lift_split(args, in.instance, q, budget);
    } else if (args.op == "subdivide") {
        if (args.edge < 0) fail(errc::parse_error, "--op subdivide needs --edge");
        res = lift_subdivide(in.instance, q, args.edge, 2);
    } else if (args.op == "replace-path") {
        if (args.edge < 0) fail(errc::parse_error, "--op replace-path needs --edge");
        res = lift_subdivide(in.instance, q, args.edge, args.length);
    } else if (args.op == "contract-subgraph") {
        if (args.edges.empty() || args.s < 0 || args.t < 0)
            fail(errc::parse_error, "--op contract-subgraph needs --edges, --s and --t");
        res = contract_subgraph_to_edge(in.instance, q,
                                        parse_int_list(args.edges, "--edges"), args.s, args.t);
    } else {
        fail(errc::parse_error, "unknown --op '" + args.op +
                                    "' (use split, subdivide, replace-path, contract-subgraph)");
    }

    write_file(args.output + ".mc", print_instance(res.instance));
    write_file(args.output + ".ineq", print_inequality(res.ineq));
    if (res.omega) std::cout << "omega " << rat_to_string(*res.omega) << "\n";
    if (res.new_node >= 0) std::cout << "new-node " << res.new_node << "\n";
    if (res.new_edge >= 0) std::cout << "new-edge " << res.new_edge << "\n";
    std::cout << "hypotheses " << (res.hypotheses_ok ? "ok" : "violated") << "\n";
    std::cout << "shared-hypotheses " << (res.shared_hypotheses_ok ? "ok" : "violated") << "\n";
    for (const std::string& note : res.notes) std::cout << "note " << note << "\n";
    std::cout << "wrote " << args.output << ".mc\n";
    std::cout << "wrote " << args.output << ".ineq\n";
    std::cout << "lifted " << inequality_line(res.ineq) << "\n";
    return res.hypotheses_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// reproduce

struct ReproduceArgs {
    std::string filter;
    bool list = false;
    bool verbose = false;
};

void print_indented(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) std::cout << "  " << line << "\n";
}

int run_reproduce_cmd(const ReproduceArgs& args, const Limits& limits) {
    if (args.list) {
        for (const auto& def : detail::check_registry())
            std::cout << def.name << ": " << def.description << "\n";
        return 0;
    }

    ReproduceManifest manifest = default_manifest();
    manifest.budget = limits.budget();
    RunReport report = run_reproduce(manifest, args.filter, limits.threads);

    if (report.results.empty()) {
        std::cout << "no checks match filter '" << args.filter << "'\n";
        return 2;
    }
    int failed = 0;
    for (const CheckResult& r : report.results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.milliseconds
                  << " ms)\n";
        if (!r.as_expected()) ++failed;
        if (r.budget_exceeded) std::cout << "  budget exceeded\n";
        if (args.verbose || !r.pass) print_indented(r.detail);
    }
    std::cout << report.results.size() - failed << "/" << report.results.size() << " checks ok\n";
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimum multicuts and the multicut dominant"};
    app.require_subcommand(1);
    // Let the global limit flags appear after the subcommand name as well.
    app.fallthrough();

    Limits limits;
    app.add_option("--budget", limits.partitions,
                   "cap on the connected-partition count in enumeration")
        ->capture_default_str();
    app.add_option("--hull-edges", limits.hull_edges, "edge cap for hull conversion")
        ->capture_default_str();
    app.add_option("--hull-generators", limits.hull_generators,
                   "generator cap for hull conversion")
        ->capture_default_str();
    app.add_option("--family-size", limits.family_size, "cap on star/tree separation size")
        ->capture_default_str();
    app.add_option("--threads", limits.threads, "worker threads for reproduce")
        ->capture_default_str();

    int rc = 0;

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "minimize total weight over all multicuts");
    solve->add_option("instance", solve_args.instance, "instance file")->required();
    solve->add_option("--families", solve_args.families,
                      "separation families (csv of path, star, tree)")
        ->capture_default_str();
    solve->add_option("--oracle", solve_args.oracle, "cross-check the value")
        ->check(CLI::IsMember({"brute", "none"}))
        ->capture_default_str();
    solve->add_flag("--stats", solve_args.stats, "print pivot, LP and cut counters");
    solve->callback([&] { rc = run_solve(solve_args, limits); });

    std::string enum_instance;
    auto* enumerate = app.add_subcommand("enum-multicuts", "list all minimal multicuts");
    enumerate->add_option("instance", enum_instance, "instance file")->required();
    enumerate->callback([&] { rc = run_enum(enum_instance, limits); });

    std::string facets_instance;
    bool facets_classify = false;
    auto* facets = app.add_subcommand("facets", "facet description of the multicut dominant");
    facets->add_option("instance", facets_instance, "instance file")->required();
    facets->add_flag("--classify", facets_classify, "prefix each facet with its family");
    facets->callback([&] { rc = run_facets(facets_instance, facets_classify, limits); });

    CheckIneqArgs check_args;
    auto* check = app.add_subcommand("check-ineq", "validity, dimension and facet report");
    check->add_option("instance", check_args.instance, "instance file")->required();
    check->add_option("inequality", check_args.inequality, "inequality file")->required();
    check->add_flag("--shared", check_args.shared,
                    "also decide facetness for the multicut polytope");
    check->callback([&] { rc = run_check_ineq(check_args, limits); });

    std::string desc_instance, desc_ineqs;
    auto* desc = app.add_subcommand("check-description",
                                    "compare a candidate inequality list with the facets");
    desc->add_option("instance", desc_instance, "instance file")->required();
    desc->add_option("inequalities", desc_ineqs, "candidate inequality file")->required();
    desc->callback([&] { rc = run_check_description(desc_instance, desc_ineqs, limits); });

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen-ineq", "emit a named inequality and its host instance");
    gen->add_option("--family", gen_args.family,
                    "circular-star, complete-star, tree, odd-cycle, wagner, generalized-wagner")
        ->required();
    gen->add_option("--n", gen_args.n, "family size parameter");
    gen->add_option("--k", gen_args.k, "tree cut parameter");
    gen->add_option("--cap", gen_args.cap, "generalized Wagner host half-length N");
    gen->add_option("--beta", gen_args.beta, "Wagner beta in {1,2}")->capture_default_str();
    gen->add_option("--breakpoints", gen_args.breakpoints,
                    "generalized Wagner breakpoints (csv, increasing, ending at N)");
    gen->add_option("-o,--output", gen_args.output, "output prefix (default from the family)");
    gen->callback([&] { rc = run_gen_ineq(gen_args, limits); });

    SeparateArgs sep_args;
    auto* sep = app.add_subcommand("separate", "most violated family inequalities at a point");
    sep->add_option("instance", sep_args.instance, "instance file")->required();
    sep->add_option("point", sep_args.point, "point file, one rational per edge")->required();
    sep->add_option("--families", sep_args.families, "csv of path, star, tree")
        ->capture_default_str();
    sep->add_option("--k", sep_args.k, "star size for star separation")->capture_default_str();
    sep->add_option("--l", sep_args.l, "tree size for tree separation")->capture_default_str();
    sep->callback([&] { rc = run_separate(sep_args, limits); });

    LiftArgs lift_args;
    auto* lift = app.add_subcommand("lift", "transfer an inequality along a graph operation");
    lift->add_option("instance", lift_args.instance, "instance file")->required();
    lift->add_option("inequality", lift_args.inequality, "inequality file")->required();
    lift->add_option("--op", lift_args.op, "split, subdivide, replace-path, contract-subgraph")
        ->required()
        ->check(CLI::IsMember({"split", "subdivide", "replace-path", "contract-subgraph"}));
    lift->add_option("--node", lift_args.node, "split: node to split");
    lift->add_option("--to-v2", lift_args.to_v2, "split: incident edges moved to v2 (csv)");
    lift->add_option("--pair-v1", lift_args.pair_v1,
                     "split: partners whose pair stays on v1 only (csv)");
    lift->add_option("--pair-v2", lift_args.pair_v2,
                     "split: partners whose pair moves to v2 only (csv)");
    lift->add_option("--pair-drop", lift_args.pair_drop,
                     "split: partners whose pair is dropped (csv)");
    lift->add_option("--edge", lift_args.edge, "subdivide/replace-path: edge to replace");
    lift->add_option("--length", lift_args.length, "replace-path: path length")
        ->capture_default_str();
    lift->add_option("--edges", lift_args.edges, "contract-subgraph: subgraph edges (csv)");
    lift->add_option("--s", lift_args.s, "contract-subgraph: first attachment node");
    lift->add_option("--t", lift_args.t, "contract-subgraph: second attachment node");
    lift->add_option("-o,--output", lift_args.output, "output prefix")->capture_default_str();
    lift->callback([&] { rc = run_lift(lift_args, limits); });

    ReproduceArgs rep_args;
    auto* rep = app.add_subcommand("reproduce", "run the named result checks");
    rep->add_option("--filter", rep_args.filter, "substring filter on check names");
    rep->add_flag("--list", rep_args.list, "list checks without running them");
    rep->add_flag("-v,--verbose", rep_args.verbose, "print detail for passing checks too");
    rep->callback([&] { rc = run_reproduce_cmd(rep_args, limits); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::budget_exceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

#ifndef MCD_IO_HPP
#define MCD_IO_HPP

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mcd/error.hpp"
#include "mcd/graph.hpp"
#include "mcd/inequality.hpp"
#include "mcd/linalg.hpp"
#include "mcd/multicut.hpp"
#include "mcd/rational.hpp"

namespace mcd {

/// An instance file bundles the graph, the terminal pairs and the edge
/// weights, so the parser returns all three. Weights are indexed by the
/// canonical edge order of the built graph, not by file order.
struct ParsedInstance {
    MulticutInstance instance;
    WeightVector weights;
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& name, int line, const std::string& msg) {
    if (line > 0) fail(errc::parse_error, name + ":" + std::to_string(line) + ": " + msg);
    fail(errc::parse_error, name + ": " + msg);
}

/// Splits a line into whitespace separated tokens after stripping the
/// comment tail (everything from the first '#').
inline std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

inline bool is_integer_token(const std::string& tok) {
    std::size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

inline bool is_rational_token(const std::string& tok) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return is_integer_token(tok);
    return is_integer_token(tok.substr(0, slash)) && is_integer_token(tok.substr(slash + 1));
}

inline Int parse_int_token(const std::string& name, int line, const std::string& tok) {
    if (!is_integer_token(tok)) parse_fail(name, line, "expected an integer, got '" + tok + "'");
    return Int(tok);
}

inline int parse_index_token(const std::string& name, int line, const std::string& tok,
                             long limit, const char* what) {
    Int v = parse_int_token(name, line, tok);
    if (v < 0 || v >= limit)
        parse_fail(name, line, std::string(what) + " " + tok + " out of range [0, " +
                                   std::to_string(limit) + ")");
    return static_cast<int>(v.get_si());
}

inline Rat parse_rat_token(const std::string& name, int line, const std::string& tok) {
    if (!is_rational_token(tok)) parse_fail(name, line, "expected a rational, got '" + tok + "'");
    if (tok.find('/') != std::string::npos && Int(tok.substr(tok.find('/') + 1)) == 0)
        parse_fail(name, line, "rational with zero denominator '" + tok + "'");
    return parse_rat(tok);
}

} // namespace detail

/// Reads an instance in the line format
///
///     nodes N
///     edge u v [weight]      # weight is a rational p/q, default 1
///     pair s t
///
/// Blank lines are skipped and '#' starts a comment. The `nodes` line must
/// come first; every structural violation (range, self loop, duplicate edge,
/// equal pair endpoints, negative weight) raises errc::parse_error carrying
/// "name:line".
inline ParsedInstance parse_instance(std::istream& in, const std::string& name = "<stream>") {
    long node_count = -1;
    std::vector<std::pair<int, int>> edges;
    std::map<NodePair, Rat> weight_of;
    std::vector<NodePair> pairs;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto tokens = detail::tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];
        if (kind == "nodes") {
            if (node_count >= 0) detail::parse_fail(name, line, "repeated 'nodes' line");
            if (tokens.size() != 2) detail::parse_fail(name, line, "usage: nodes N");
            Int n = detail::parse_int_token(name, line, tokens[1]);
            if (n < 0) detail::parse_fail(name, line, "negative node count");
            node_count = n.get_si();
        } else if (kind == "edge") {
            if (node_count < 0) detail::parse_fail(name, line, "'edge' before 'nodes'");
            if (tokens.size() != 3 && tokens.size() != 4)
                detail::parse_fail(name, line, "usage: edge u v [weight]");
            int u = detail::parse_index_token(name, line, tokens[1], node_count, "node");
            int v = detail::parse_index_token(name, line, tokens[2], node_count, "node");
            if (u == v) detail::parse_fail(name, line, "self loop at node " + tokens[1]);
            Rat w = 1;
            if (tokens.size() == 4) {
                w = detail::parse_rat_token(name, line, tokens[3]);
                if (w < 0) detail::parse_fail(name, line, "negative weight " + tokens[3]);
            }
            NodePair key = make_pair_canonical(u, v);
            if (weight_of.count(key))
                detail::parse_fail(name, line, "duplicate edge " + std::to_string(u) + " " +
                                                   std::to_string(v));
            weight_of.emplace(key, std::move(w));
            edges.emplace_back(u, v);
        } else if (kind == "pair") {
            if (node_count < 0) detail::parse_fail(name, line, "'pair' before 'nodes'");
            if (tokens.size() != 3) detail::parse_fail(name, line, "usage: pair s t");
            int s = detail::parse_index_token(name, line, tokens[1], node_count, "node");
            int t = detail::parse_index_token(name, line, tokens[2], node_count, "node");
            if (s == t) detail::parse_fail(name, line, "pair endpoints coincide");
            pairs.push_back(make_pair_canonical(s, t));
        } else {
            detail::parse_fail(name, line, "unknown directive '" + kind + "'");
        }
    }
    if (node_count < 0) detail::parse_fail(name, 0, "missing 'nodes' line");

    Graph g = build_graph(static_cast<int>(node_count), edges);
    WeightVector weights;
    weights.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) weights.push_back(weight_of.at(make_pair_canonical(u, v)));
    return ParsedInstance{build_instance(std::move(g), pairs), std::move(weights)};
}

/// Reads one inequality in the format `ineq b <= a_0 a_1 ... a_{m-1}` with
/// integer tokens only; a rational or otherwise malformed token raises
/// errc::parse_error with the line number. Comments and blank lines are
/// allowed around the single `ineq` line. The inequality is kept literally
/// (no normalization), so printing reproduces the file.
inline LinearInequality parse_inequality(std::istream& in, const std::string& name = "<stream>") {
    LinearInequality out;
    bool seen = false;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto tokens = detail::tokenize(raw);
        if (tokens.empty()) continue;
        if (tokens[0] != "ineq")
            detail::parse_fail(name, line, "unknown directive '" + tokens[0] + "'");
        if (seen) detail::parse_fail(name, line, "repeated 'ineq' line");
        if (tokens.size() < 3 || tokens[2] != "<=")
            detail::parse_fail(name, line, "usage: ineq b <= a_0 a_1 ... a_{m-1}");
        out.rhs = detail::parse_int_token(name, line, tokens[1]);
        for (std::size_t i = 3; i < tokens.size(); ++i)
            out.coeffs.push_back(detail::parse_int_token(name, line, tokens[i]));
        out.provenance.family = "file";
        seen = true;
    }
    if (!seen) detail::parse_fail(name, 0, "missing 'ineq' line");
    return out;
}

/// Reads a point in edge space: one rational per edge index, whitespace or
/// newline separated, '#' comments allowed. The caller checks the dimension
/// against its instance.
inline RatVec parse_point(std::istream& in, const std::string& name = "<stream>") {
    RatVec x;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        for (const std::string& tok : detail::tokenize(raw))
            x.push_back(detail::parse_rat_token(name, line, tok));
    }
    return x;
}

/// Reads a whole description: any number of `ineq` lines in the same format
/// as parse_inequality. Used for candidate lists; may be empty.
inline std::vector<LinearInequality> parse_inequalities(std::istream& in,
                                                        const std::string& name = "<stream>") {
    std::vector<LinearInequality> out;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto tokens = detail::tokenize(raw);
        if (tokens.empty()) continue;
        if (tokens[0] != "ineq")
            detail::parse_fail(name, line, "unknown directive '" + tokens[0] + "'");
        if (tokens.size() < 3 || tokens[2] != "<=")
            detail::parse_fail(name, line, "usage: ineq b <= a_0 a_1 ... a_{m-1}");
        LinearInequality q;
        q.rhs = detail::parse_int_token(name, line, tokens[1]);
        for (std::size_t i = 3; i < tokens.size(); ++i)
            q.coeffs.push_back(detail::parse_int_token(name, line, tokens[i]));
        q.provenance.family = "file";
        out.push_back(std::move(q));
    }
    return out;
}

inline ParsedInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, path + ": cannot open file");
    return parse_instance(in, path);
}

inline LinearInequality parse_inequality_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, path + ": cannot open file");
    return parse_inequality(in, path);
}

inline std::vector<LinearInequality> parse_inequalities_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, path + ": cannot open file");
    return parse_inequalities(in, path);
}

inline RatVec parse_point_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, path + ": cannot open file");
    return parse_point(in, path);
}

/// Writes the instance in canonical edge order; weights equal to 1 are
/// omitted, so parse(print(...)) reproduces the in-memory value exactly.
inline std::string print_instance(const MulticutInstance& inst, const WeightVector& weights) {
    if (static_cast<int>(weights.size()) != static_cast<int>(inst.graph.edges.size()))
        fail(errc::dimension_mismatch, "weight vector does not match the edge count");
    std::ostringstream out;
    out << "nodes " << inst.graph.node_count << "\n";
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
        out << "edge " << inst.graph.edges[e].first << " " << inst.graph.edges[e].second;
        if (weights[e] != 1) out << " " << rat_to_string(weights[e]);
        out << "\n";
    }
    for (const NodePair& p : inst.pairs) out << "pair " << p.a << " " << p.b << "\n";
    return out.str();
}

inline std::string print_instance(const MulticutInstance& inst) {
    return print_instance(inst, WeightVector(inst.graph.edges.size(), Rat(1)));
}

inline std::string print_inequality(const LinearInequality& q) {
    std::ostringstream out;
    out << "ineq " << q.rhs.get_str() << " <=";
    for (const Int& a : q.coeffs) out << " " << a.get_str();
    out << "\n";
    return out.str();
}

inline std::string print_point(const RatVec& x) {
    std::ostringstream out;
    for (const Rat& v : x) out << rat_to_string(v) << "\n";
    return out.str();
}

/// Human readable one-line form "a_0 x_0 + ... >= b" used in reports.
inline std::string pretty_inequality(const LinearInequality& q) {
    std::ostringstream out;
    bool first = true;
    for (int e = 0; e < q.dimension(); ++e) {
        if (q.coeffs[e] == 0) continue;
        if (!first) out << " + ";
        if (q.coeffs[e] != 1) out << q.coeffs[e].get_str() << "*";
        out << "x" << e;
        first = false;
    }
    if (first) out << "0";
    out << " >= " << q.rhs.get_str();
    return out.str();
}

} // namespace mcd

#endif

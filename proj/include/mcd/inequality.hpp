#ifndef MCD_INEQUALITY_HPP
#define MCD_INEQUALITY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mcd/edgeset.hpp"
#include "mcd/error.hpp"
#include "mcd/graph.hpp"
#include "mcd/rational.hpp"

namespace mcd {

/// Where an inequality came from: a family name plus its integer parameters.
/// Purely informational; never part of equality comparisons.
struct FamilyParams {
    std::string family;
    std::vector<std::pair<std::string, long>> params;

    std::string to_string() const {
        std::string out = family;
        if (params.empty()) return out;
        out += "(";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) out += ",";
            out += params[i].first + "=" + std::to_string(params[i].second);
        }
        return out + ")";
    }
};

/// Inequality a^T x >= b over edge space, with coprime integer coefficients.
/// Comparison ignores provenance, so two routes that produce the same facet
/// compare equal after normalize().
struct LinearInequality {
    std::vector<Int> coeffs;
    Int rhs = 0;
    FamilyParams provenance;

    int dimension() const { return static_cast<int>(coeffs.size()); }

    /// Divides coefficients and right-hand side by their common content.
    /// Idempotent; the inequality keeps its orientation (>=).
    void normalize() {
        std::vector<Int> all = coeffs;
        all.push_back(rhs);
        Int g = content(all);
        if (g <= 1) return;
        for (Int& c : coeffs) c /= g;
        rhs /= g;
    }

    EdgeSet support() const {
        EdgeSet s;
        for (int e = 0; e < dimension(); ++e)
            if (coeffs[e] != 0) s.insert(e);
        return s;
    }

    bool full_support() const { return support().size() == dimension(); }

    friend bool operator==(const LinearInequality& x, const LinearInequality& y) {
        return x.coeffs == y.coeffs && x.rhs == y.rhs;
    }
};

inline LinearInequality make_inequality(std::vector<Int> coeffs, Int rhs, FamilyParams tag = {}) {
    LinearInequality q{std::move(coeffs), std::move(rhs), std::move(tag)};
    q.normalize();
    return q;
}

/// Canonical comparison used to order facet lists: support size first, then
/// lexicographic coefficients, then right-hand side.
inline bool canonical_less(const LinearInequality& x, const LinearInequality& y) {
    int sx = x.support().size(), sy = y.support().size();
    if (sx != sy) return sx < sy;
    if (x.coeffs != y.coeffs) return x.coeffs < y.coeffs;
    return x.rhs < y.rhs;
}

/// Exact a^T x for a rational point.
inline Rat evaluate(const LinearInequality& q, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != q.dimension())
        fail(errc::dimension_mismatch, "point dimension != inequality dimension");
    Rat acc = 0;
    for (int e = 0; e < q.dimension(); ++e)
        if (q.coeffs[e] != 0) acc += Rat(q.coeffs[e]) * x[e];
    return acc;
}

/// a^T x for a 0/1 incidence vector given as an edge set.
inline Int evaluate(const LinearInequality& q, const EdgeSet& F) {
    Int acc = 0;
    for (int e : F.indices()) {
        if (e >= q.dimension()) fail(errc::dimension_mismatch, "edge set leaves inequality dimension");
        acc += q.coeffs[e];
    }
    return acc;
}

/// A generated inequality together with its canonical host instance.
struct Generated {
    MulticutInstance instance;
    LinearInequality ineq;
};

/// x_e >= 1 when the endpoints are a terminal pair (the edge must be cut),
/// x_e >= 0 otherwise.
inline LinearInequality gen_edge_ineq(const MulticutInstance& inst, int e) {
    if (e < 0 || e >= inst.graph.edge_count()) fail(errc::invalid_edge, "no edge " + std::to_string(e));
    std::vector<Int> a(inst.graph.edge_count(), 0);
    a[e] = 1;
    auto [u, v] = inst.graph.edges[e];
    Int rhs = is_pair(inst, u, v) ? 1 : 0;
    return make_inequality(std::move(a), rhs, {"edge", {{"e", e}}});
}

/// sum_{e in P} x_e >= 1 for a simple s-t path P of a terminal pair {s, t}.
inline LinearInequality gen_path_ineq(const MulticutInstance& inst, const std::vector<int>& path) {
    const Graph& g = inst.graph;
    if (path.empty()) fail(errc::not_a_path, "empty edge list");
    for (int e : path)
        if (e < 0 || e >= g.edge_count()) fail(errc::invalid_edge, "no edge " + std::to_string(e));

    // Walk the edge list, checking that consecutive edges chain and no node
    // repeats (simple path).
    auto [s, next] = g.edges[path[0]];
    if (path.size() > 1) {
        auto [c, d] = g.edges[path[1]];
        if (next != c && next != d) std::swap(s, next);
        if (g.edges[path[1]].first != next && g.edges[path[1]].second != next)
            fail(errc::not_a_path, "edges 0 and 1 do not chain");
    }
    std::vector<char> used(g.node_count, 0);
    used[s] = 1;
    int at = next;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) {
            auto [u, v] = g.edges[path[i]];
            if (u == at)
                at = v;
            else if (v == at)
                at = u;
            else
                fail(errc::not_a_path, "edge " + std::to_string(path[i]) + " does not chain");
        }
        if (used[at]) fail(errc::not_a_path, "node " + std::to_string(at) + " repeats");
        used[at] = 1;
    }
    if (!is_pair(inst, s, at))
        fail(errc::pair_missing, "path endpoints {" + std::to_string(s) + "," + std::to_string(at) +
                                     "} are not a terminal pair");
    std::vector<Int> a(g.edge_count(), 0);
    for (int e : path) a[e] = 1;
    return make_inequality(std::move(a), 1, {"path", {{"s", s}, {"t", at}}});
}

namespace detail {

/// K_{1,n}: centre node 0, leaves 1..n, edge i = {0, i+1} so the spoke below
/// leaf v_i has index i.
inline Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(0, i + 1);
    return build_graph(n + 1, std::move(edges));
}

/// C_n: nodes 0..n-1, cyclic edges {i, i+1 mod n}.
inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, std::move(edges));
}

} // namespace detail

/// Circular n-star: K_{1,n} with the consecutive leaf pairs {v_i, v_{i+1}}
/// taken cyclically; sum of all spokes >= ceil(n/2). Facet-defining only for
/// odd n, which the generator enforces.
inline Generated gen_circular_star(int n) {
    if (n < 3) fail(errc::too_small, "circular star needs n >= 3");
    if (n % 2 == 0) fail(errc::even_n, "circular star needs odd n");
    Graph g = detail::star_graph(n);
    std::vector<NodePair> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back(make_pair_canonical(i + 1, (i + 1) % n + 1));
    MulticutInstance inst = build_instance(std::move(g), std::move(pairs));
    std::vector<Int> a(n, 1);
    return {std::move(inst), make_inequality(std::move(a), (n + 1) / 2, {"circular-star", {{"n", n}}})};
}

/// Complete n-star: K_{1,n} with every leaf pair terminal; sum of all spokes
/// >= n - 1 (all spokes but one must be cut).
inline Generated gen_complete_star(int n) {
    if (n < 2) fail(errc::too_small, "complete star needs n >= 2");
    Graph g = detail::star_graph(n);
    std::vector<NodePair> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    MulticutInstance inst = build_instance(std::move(g), std::move(pairs));
    std::vector<Int> a(n, 1);
    return {std::move(inst), make_inequality(std::move(a), n - 1, {"complete-star", {{"n", n}}})};
}

/// The two-level tree T_n: root 0, middle nodes v_i = i (1 <= i <= n), and
/// for each i < j a leaf s_{i,j} below v_i paired with a leaf t_{i,j} below
/// v_j. Root edges L1 sit at indices 0..n-1 (L1 edge i-1 joins the root to
/// v_i); all remaining edges form L2. The (n,k)-tree inequality puts n-k on
/// L1 and 1 on L2 with right-hand side k(n-k) + C(n-k, 2).
inline Generated gen_tree_ineq(int n, int k) {
    if (k < 2) fail(errc::too_small, "(n,k)-tree inequality needs k >= 2");
    if (n <= k) fail(errc::too_small, "(n,k)-tree inequality needs n > k");
    std::vector<std::pair<int, int>> edges;
    std::vector<NodePair> pairs;
    for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
    int next_node = n + 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int s = next_node++, t = next_node++;
            edges.emplace_back(i, s);
            edges.emplace_back(j, t);
            pairs.push_back({s, t});
        }
    Graph g = build_graph(next_node, std::move(edges));
    MulticutInstance inst = build_instance(std::move(g), std::move(pairs));

    std::vector<Int> a(inst.graph.edge_count(), 1);
    for (int e = 0; e < n; ++e) a[e] = n - k;
    Int rhs = Int(k) * (n - k) + Int(n - k) * (n - k - 1) / 2;
    return {std::move(inst), make_inequality(std::move(a), rhs, {"tree", {{"n", n}, {"k", k}}})};
}

/// Odd cycle C_n with every non-adjacent node pair terminal; sum of all
/// edges >= ceil(n/2).
inline Generated gen_odd_cycle(int n) {
    if (n < 5) fail(errc::too_small, "odd cycle inequality needs n >= 5");
    if (n % 2 == 0) fail(errc::even_n, "odd cycle inequality needs odd n");
    Graph g = detail::cycle_graph(n);
    std::vector<NodePair> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue; // adjacent around the wrap
            pairs.push_back({i, j});
        }
    MulticutInstance inst = build_instance(std::move(g), std::move(pairs));
    std::vector<Int> a(n, 1);
    return {std::move(inst), make_inequality(std::move(a), (n + 1) / 2, {"odd-cycle", {{"n", n}}})};
}

/// Generalized Wagner inequality on C_{2N} with antipodal terminal pairs
/// {i, i+N}. The first half of the cycle splits into n blocks at the given
/// breakpoints 0 < l_1 < ... < l_n = N; edges in block j carry beta when j is
/// even and beta' = 3 - beta when j is odd, and each antipodal edge carries
/// the complementary value, so every two-edge multicut {i, i+N} is tight at
/// the right-hand side 3.
inline Generated gen_generalized_wagner(int n, int N, const std::vector<int>& breakpoints,
                                        int beta) {
    if (n < 5) fail(errc::too_small, "generalized Wagner needs n >= 5");
    if (n % 2 == 0) fail(errc::even_n, "generalized Wagner needs odd n");
    if (beta != 1 && beta != 2) fail(errc::bad_breakpoints, "beta must be 1 or 2");
    if (static_cast<int>(breakpoints.size()) != n)
        fail(errc::bad_breakpoints, "need exactly n breakpoints");
    int prev = 0;
    for (int b : breakpoints) {
        if (b <= prev) fail(errc::bad_breakpoints, "breakpoints must increase strictly from 1");
        prev = b;
    }
    if (breakpoints.back() != N) fail(errc::bad_breakpoints, "last breakpoint must equal N");

    Graph g = detail::cycle_graph(2 * N);
    std::vector<NodePair> pairs;
    for (int i = 0; i < N; ++i) pairs.push_back({i, i + N});
    MulticutInstance inst = build_instance(std::move(g), std::move(pairs));

    std::vector<Int> a(inst.graph.edge_count(), 0);
    int block = 0;
    for (int i = 0; i < N; ++i) {
        while (i >= breakpoints[block]) ++block;
        Int c = (block % 2 == 0) ? beta : 3 - beta;
        a[edge_index(inst.graph, i, i + 1)] = c;
        a[edge_index(inst.graph, i + N, (i + N + 1) % (2 * N))] = 3 - c;
    }
    FamilyParams tag{"generalized-wagner", {{"n", n}, {"N", N}, {"beta", beta}}};
    return {std::move(inst), make_inequality(std::move(a), 3, std::move(tag))};
}

/// Wagner inequality on C_{2n} with antipodal pairs: the degenerate block
/// structure l_i = i, i.e. coefficients alternate beta / beta' around the
/// cycle with antipodal edges complementary; right-hand side 3.
inline Generated gen_wagner(int n, int beta) {
    std::vector<int> breakpoints;
    for (int i = 1; i <= n; ++i) breakpoints.push_back(i);
    Generated g = gen_generalized_wagner(n, n, breakpoints, beta);
    g.ineq.provenance = {"wagner", {{"n", n}, {"beta", beta}}};
    return g;
}

} // namespace mcd

#endif

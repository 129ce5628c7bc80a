#ifndef MCD_CLASSIFY_HPP
#define MCD_CLASSIFY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcd/graph.hpp"
#include "mcd/inequality.hpp"

namespace mcd {

namespace detail {

/// Adjacency and degrees of the subgraph spanned by the given edge indices.
struct SupportGraph {
    std::vector<int> edges;
    std::set<int> nodes;
    std::map<int, std::vector<int>> adj;

    SupportGraph(const Graph& g, const EdgeSet& support) {
        for (int e : support.indices()) {
            edges.push_back(e);
            auto [u, v] = g.edges[e];
            nodes.insert(u);
            nodes.insert(v);
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }

    int degree(int v) const {
        auto it = adj.find(v);
        return it == adj.end() ? 0 : static_cast<int>(it->second.size());
    }

    bool connected() const {
        if (nodes.empty()) return true;
        std::set<int> seen;
        std::vector<int> stack{*nodes.begin()};
        seen.insert(*nodes.begin());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj.at(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        return seen.size() == nodes.size();
    }
};

inline bool all_coeffs_one(const LinearInequality& q, const std::vector<int>& edges) {
    for (int e : edges)
        if (q.coeffs[e] != 1) return false;
    return true;
}

/// Terminal pairs whose endpoints both lie in the given node set.
inline std::vector<NodePair> pairs_within(const MulticutInstance& inst, const std::set<int>& nodes) {
    std::vector<NodePair> out;
    for (const NodePair& p : inst.pairs)
        if (nodes.count(p.a) && nodes.count(p.b)) out.push_back(p);
    return out;
}

inline std::optional<FamilyParams> match_edge(const MulticutInstance& inst,
                                              const LinearInequality& q) {
    EdgeSet s = q.support();
    if (s.size() != 1) return std::nullopt;
    int e = s.indices()[0];
    if (q.coeffs[e] != 1) return std::nullopt;
    auto [u, v] = inst.graph.edges[e];
    Int want = is_pair(inst, u, v) ? 1 : 0;
    if (q.rhs != want) return std::nullopt;
    return FamilyParams{"edge", {{"e", e}}};
}

inline std::optional<FamilyParams> match_path(const MulticutInstance& inst,
                                              const LinearInequality& q,
                                              const SupportGraph& sup) {
    if (q.rhs != 1 || sup.edges.empty()) return std::nullopt;
    if (!all_coeffs_one(q, sup.edges)) return std::nullopt;
    std::vector<int> ends;
    for (int v : sup.nodes) {
        int d = sup.degree(v);
        if (d > 2) return std::nullopt;
        if (d == 1) ends.push_back(v);
    }
    if (ends.size() != 2 || !sup.connected()) return std::nullopt;
    if (sup.nodes.size() != sup.edges.size() + 1) return std::nullopt;
    if (!is_pair(inst, ends[0], ends[1])) return std::nullopt;
    return FamilyParams{"path",
                        {{"s", std::min(ends[0], ends[1])},
                         {"t", std::max(ends[0], ends[1])},
                         {"length", static_cast<long>(sup.edges.size())}}};
}

inline std::optional<FamilyParams> match_odd_cycle(const MulticutInstance& inst,
                                                   const LinearInequality& q,
                                                   const SupportGraph& sup) {
    int n = static_cast<int>(sup.edges.size());
    if (n < 5 || n % 2 == 0) return std::nullopt;
    if (q.rhs != (n + 1) / 2) return std::nullopt;
    if (!all_coeffs_one(q, sup.edges)) return std::nullopt;
    if (static_cast<int>(sup.nodes.size()) != n) return std::nullopt;
    for (int v : sup.nodes)
        if (sup.degree(v) != 2) return std::nullopt;
    if (!sup.connected()) return std::nullopt;
    // Every two cycle nodes without a cycle edge between them must be a
    // terminal pair, matching the validity hypothesis of the theorem.
    for (int u : sup.nodes)
        for (int v : sup.nodes) {
            if (u >= v) continue;
            const auto& nb = sup.adj.at(u);
            bool adjacent = std::find(nb.begin(), nb.end(), v) != nb.end();
            if (!adjacent && !is_pair(inst, u, v)) return std::nullopt;
        }
    return FamilyParams{"odd-cycle", {{"n", n}}};
}

/// Matches both star families: spokes of a K_{1,n} with unit coefficients,
/// terminal structure on the leaves complete (rhs n-1) or circular
/// (rhs (n+1)/2, odd n).
inline std::optional<FamilyParams> match_star(const MulticutInstance& inst,
                                              const LinearInequality& q,
                                              const SupportGraph& sup) {
    int n = static_cast<int>(sup.edges.size());
    if (n < 2) return std::nullopt;
    if (!all_coeffs_one(q, sup.edges)) return std::nullopt;
    if (static_cast<int>(sup.nodes.size()) != n + 1) return std::nullopt;
    int centre = -1;
    for (int v : sup.nodes) {
        int d = sup.degree(v);
        if (d == n && n > 1) {
            if (centre >= 0) return std::nullopt;
            centre = v;
        } else if (d != 1) {
            return std::nullopt;
        }
    }
    if (centre < 0) return std::nullopt;

    const auto pairs = pairs_within(inst, sup.nodes);
    std::map<int, int> pair_degree;
    for (const NodePair& p : pairs) {
        if (p.a == centre || p.b == centre) return std::nullopt;
        ++pair_degree[p.a];
        ++pair_degree[p.b];
    }
    if (q.rhs == n - 1 && static_cast<long>(pairs.size()) == static_cast<long>(n) * (n - 1) / 2)
        return FamilyParams{"complete-star", {{"n", n}}};
    if (q.rhs == (n + 1) / 2 && n % 2 == 1 && n >= 3 &&
        static_cast<int>(pairs.size()) == n) {
        for (int v : sup.nodes)
            if (v != centre && pair_degree[v] != 2) return std::nullopt;
        // n pairs of degree 2 over n leaves form one cycle iff connected.
        std::map<int, std::vector<int>> padj;
        for (const NodePair& p : pairs) {
            padj[p.a].push_back(p.b);
            padj[p.b].push_back(p.a);
        }
        std::set<int> seen{pairs[0].a};
        std::vector<int> stack{pairs[0].a};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : padj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        if (static_cast<int>(seen.size()) == n)
            return FamilyParams{"circular-star", {{"n", n}}};
    }
    return std::nullopt;
}

/// Matches the (n,k)-tree inequality: a depth-two tree with n trunk edges of
/// coefficient n-k below the root, n-1 unit pendant edges below each middle
/// node, and one terminal pair bridging every two middles.
inline std::optional<FamilyParams> match_tree(const MulticutInstance& inst,
                                              const LinearInequality& q,
                                              const SupportGraph& sup) {
    if (sup.nodes.empty() || !sup.connected()) return std::nullopt;
    if (sup.nodes.size() != sup.edges.size() + 1) return std::nullopt;
    // The root is the unique node all of whose support neighbours are
    // internal; middles always carry degree-one pendant leaves.
    int root = -1;
    for (int v : sup.nodes) {
        if (sup.degree(v) < 2) continue;
        bool leaf_free = true;
        for (int w : sup.adj.at(v))
            if (sup.degree(w) == 1) leaf_free = false;
        if (!leaf_free) continue;
        if (root >= 0) return std::nullopt;
        root = v;
    }
    if (root < 0) return std::nullopt;
    std::set<int> middles(sup.adj.at(root).begin(), sup.adj.at(root).end());
    int n = static_cast<int>(middles.size());
    if (n < 3 || sup.degree(root) != n) return std::nullopt;

    Int trunk_coeff = -1;
    std::map<int, int> middle_of_leaf;
    for (int e : sup.edges) {
        auto [u, v] = inst.graph.edges[e];
        if (u == root || v == root) {
            int m = (u == root) ? v : u;
            if (!middles.count(m)) return std::nullopt;
            if (trunk_coeff < 0)
                trunk_coeff = q.coeffs[e];
            else if (q.coeffs[e] != trunk_coeff)
                return std::nullopt;
        } else {
            int m = middles.count(u) ? u : (middles.count(v) ? v : -1);
            if (m < 0) return std::nullopt;
            int leaf = (m == u) ? v : u;
            if (middles.count(leaf) || leaf == root) return std::nullopt;
            if (sup.degree(leaf) != 1) return std::nullopt;
            if (q.coeffs[e] != 1) return std::nullopt;
            middle_of_leaf[leaf] = m;
        }
    }
    if (trunk_coeff < 1 || trunk_coeff >= n) return std::nullopt;
    long k = n - trunk_coeff.get_si();
    if (k < 2 || k >= n) return std::nullopt;
    if (q.rhs != Int(k) * (n - k) + Int(n - k) * (n - k - 1) / 2) return std::nullopt;
    for (int m : middles)
        if (sup.degree(m) != n) return std::nullopt; // 1 trunk + n-1 pendants

    // One pair per unordered middle pair, each leaf used exactly once.
    const auto pairs = pairs_within(inst, sup.nodes);
    if (static_cast<long>(pairs.size()) != static_cast<long>(n) * (n - 1) / 2)
        return std::nullopt;
    std::set<std::pair<int, int>> bridged;
    std::set<int> used_leaves;
    for (const NodePair& p : pairs) {
        auto ia = middle_of_leaf.find(p.a);
        auto ib = middle_of_leaf.find(p.b);
        if (ia == middle_of_leaf.end() || ib == middle_of_leaf.end()) return std::nullopt;
        if (ia->second == ib->second) return std::nullopt;
        if (!used_leaves.insert(p.a).second || !used_leaves.insert(p.b).second)
            return std::nullopt;
        bridged.insert({std::min(ia->second, ib->second), std::max(ia->second, ib->second)});
    }
    if (static_cast<long>(bridged.size()) != static_cast<long>(n) * (n - 1) / 2)
        return std::nullopt;
    return FamilyParams{"tree", {{"n", n}, {"k", k}}};
}

/// Matches Wagner and generalized Wagner inequalities on the canonically
/// labelled cycle C_{2N} with antipodal terminal pairs. A coefficient cycle
/// with values in {1,2}, right-hand side 3 and antipodal complementarity
/// (c_i + c_{i+N} = 3) belongs to the family iff it has 2n maximal constant
/// blocks for some odd n >= 5: rotating a block boundary to position 0
/// recovers the breakpoint normal form, and with two values the blocks
/// alternate automatically. Degenerate block length one (n = N) is the plain
/// Wagner inequality. Relabelled isomorphic hosts are not recognized.
inline std::optional<FamilyParams> match_wagner(const MulticutInstance& inst,
                                                const LinearInequality& q) {
    const Graph& g = inst.graph;
    int two_n = g.node_count;
    if (two_n < 10 || two_n % 2 != 0) return std::nullopt;
    if (g.edge_count() != two_n) return std::nullopt;
    int N = two_n / 2;
    std::vector<int> cyc(two_n);
    for (int i = 0; i < two_n; ++i) {
        cyc[i] = edge_index(g, i, (i + 1) % two_n);
        if (cyc[i] < 0) return std::nullopt;
    }
    if (static_cast<int>(inst.pairs.size()) != N) return std::nullopt;
    for (int i = 0; i < N; ++i)
        if (!is_pair(inst, i, i + N)) return std::nullopt;

    if (q.rhs != 3) return std::nullopt;
    std::vector<Int> c(two_n);
    for (int i = 0; i < two_n; ++i) {
        c[i] = q.coeffs[cyc[i]];
        if (c[i] != 1 && c[i] != 2) return std::nullopt;
    }
    for (int i = 0; i < N; ++i)
        if (c[i] + c[i + N] != 3) return std::nullopt;
    int switches = 0;
    for (int i = 0; i < two_n; ++i)
        if (c[i] != c[(i + 1) % two_n]) ++switches;
    if (switches % 2 != 0) return std::nullopt; // impossible on a cycle
    int n = switches / 2;
    if (n < 5 || n % 2 == 0) return std::nullopt;
    if (n == N) return FamilyParams{"wagner", {{"n", n}}};
    return FamilyParams{"generalized-wagner", {{"n", n}, {"N", N}}};
}

} // namespace detail

/// Assigns a family label to an inequality over the instance's edge space:
/// "edge", "path", "odd-cycle", "complete-star", "circular-star", "tree",
/// "wagner", "generalized-wagner" or "unknown". Matching is structural (the
/// support subgraph, coefficient pattern, right-hand side and the terminal
/// pairs inside the support must reproduce the generator), so the label is
/// exact on generated instances and their facet lists; it does not attempt
/// isomorphism beyond the cycle symmetries noted at match_wagner.
inline FamilyParams classify_facet(const MulticutInstance& inst, LinearInequality q) {
    if (q.dimension() != inst.graph.edge_count())
        fail(errc::dimension_mismatch, "inequality does not live on the instance's edge space");
    q.normalize();
    if (auto hit = detail::match_edge(inst, q)) return *hit;
    detail::SupportGraph sup(inst.graph, q.support());
    if (auto hit = detail::match_path(inst, q, sup)) return *hit;
    if (auto hit = detail::match_odd_cycle(inst, q, sup)) return *hit;
    if (auto hit = detail::match_star(inst, q, sup)) return *hit;
    if (auto hit = detail::match_tree(inst, q, sup)) return *hit;
    if (auto hit = detail::match_wagner(inst, q)) return *hit;
    return FamilyParams{"unknown", {}};
}

} // namespace mcd

#endif

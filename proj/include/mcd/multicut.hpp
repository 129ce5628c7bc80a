#ifndef MCD_MULTICUT_HPP
#define MCD_MULTICUT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "mcd/budget.hpp"
#include "mcd/edgeset.hpp"
#include "mcd/error.hpp"
#include "mcd/graph.hpp"
#include "mcd/rational.hpp"

namespace mcd {

using WeightVector = std::vector<Rat>;

inline void check_weights(const Graph& g, const WeightVector& w) {
    if (static_cast<int>(w.size()) != g.edge_count())
        fail(errc::dimension_mismatch, "weight vector length != edge count");
    for (const Rat& q : w)
        if (q < 0) fail(errc::negative_weight, "weights must be nonnegative");
}

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

/// True iff deleting F separates every terminal pair. Pairs already
/// disconnected in the graph are satisfied automatically.
inline bool is_multicut(const MulticutInstance& inst, const EdgeSet& F) {
    detail::Dsu dsu(inst.graph.node_count);
    for (int e = 0; e < inst.graph.edge_count(); ++e)
        if (!F.contains(e)) dsu.unite(inst.graph.edges[e].first, inst.graph.edges[e].second);
    for (const NodePair& p : inst.pairs)
        if (dsu.find(p.a) == dsu.find(p.b)) return false;
    return true;
}

/// True iff F is a multicut and no proper subset is one (equivalently, no
/// single edge can be dropped).
inline bool is_minimal_multicut(const MulticutInstance& inst, const EdgeSet& F) {
    if (!is_multicut(inst, F)) return false;
    for (int e : F.indices()) {
        EdgeSet sub = F;
        sub.erase(e);
        if (is_multicut(inst, sub)) return false;
    }
    return true;
}

namespace detail {

/// Enumeration state for the partition-based minimal multicut search. Blocks
/// are grown as connected node sets; a partition qualifies iff no block
/// contains a terminal pair and every pair of blocks joined by an edge has a
/// terminal pair split between them (that witness makes each cross edge
/// irremovable, which is exactly minimality of the cross-edge set).
struct PartitionEnum {
    const MulticutInstance& inst;
    long long step_limit;
    long long steps = 0;
    std::vector<std::uint64_t> adj_mask;      // node -> neighbour mask
    std::vector<std::uint64_t> pair_mask;     // node -> partners in some pair
    std::vector<std::uint64_t> blocks;
    std::vector<EdgeSet> out;

    explicit PartitionEnum(const MulticutInstance& i, long long limit)
        : inst(i), step_limit(limit) {
        const Graph& g = inst.graph;
        adj_mask.assign(g.node_count, 0);
        pair_mask.assign(g.node_count, 0);
        for (auto [u, v] : g.edges) {
            adj_mask[u] |= 1ull << v;
            adj_mask[v] |= 1ull << u;
        }
        for (const NodePair& p : inst.pairs) {
            pair_mask[p.a] |= 1ull << p.b;
            pair_mask[p.b] |= 1ull << p.a;
        }
    }

    void tick() {
        if (++steps > step_limit)
            fail(errc::budget_exceeded, "minimal multicut enumeration exceeded the partition budget");
    }

    bool block_ok(std::uint64_t block) const {
        // Rejects a closed block when an earlier adjacent block has no split
        // pair with it. Later blocks are checked when they close.
        for (std::uint64_t other : blocks) {
            bool adjacent = false;
            for (std::uint64_t b = block; b; b &= b - 1)
                if (adj_mask[std::countr_zero(b)] & other) {
                    adjacent = true;
                    break;
                }
            if (!adjacent) continue;
            bool witness = false;
            for (std::uint64_t b = block; b && !witness; b &= b - 1)
                if (pair_mask[std::countr_zero(b)] & other) witness = true;
            if (!witness) return false;
        }
        return true;
    }

    void emit() {
        std::vector<int> block_of(inst.graph.node_count, -1);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::uint64_t b = blocks[i]; b; b &= b - 1) block_of[std::countr_zero(b)] = static_cast<int>(i);
        EdgeSet cut;
        for (int e = 0; e < inst.graph.edge_count(); ++e) {
            auto [u, v] = inst.graph.edges[e];
            if (block_of[u] != block_of[v]) cut.insert(e);
        }
        out.push_back(cut);
    }

    /// Enumerates the connected supersets of the seed within `allowed` by
    /// include/exclude decisions over a frontier queue; each connected set
    /// appears at exactly one leaf.
    void grow_block(std::uint64_t block, std::uint64_t allowed, std::vector<int>& frontier,
                    std::size_t idx, std::uint64_t seen, std::uint64_t banned) {
        tick();
        if (idx == frontier.size()) {
            if (!block_ok(block)) return;
            blocks.push_back(block);
            assign_next(allowed & ~block);
            blocks.pop_back();
            return;
        }
        int u = frontier[idx];
        // exclude u from this block
        grow_block(block, allowed, frontier, idx + 1, seen, banned | (1ull << u));
        // include u, provided it does not close a terminal pair inside
        if (pair_mask[u] & block) return;
        std::uint64_t fresh = adj_mask[u] & allowed & ~block & ~banned & ~seen;
        std::size_t added = 0;
        for (std::uint64_t b = fresh; b; b &= b - 1, ++added)
            frontier.push_back(std::countr_zero(b));
        grow_block(block | (1ull << u), allowed, frontier, idx + 1, seen | fresh, banned);
        frontier.resize(frontier.size() - added);
    }

    void assign_next(std::uint64_t unassigned) {
        if (!unassigned) {
            emit();
            return;
        }
        int v = std::countr_zero(unassigned);
        std::uint64_t allowed = unassigned & ~(1ull << v);
        std::vector<int> frontier;
        std::uint64_t seen = adj_mask[v] & allowed;
        for (std::uint64_t b = seen; b; b &= b - 1) frontier.push_back(std::countr_zero(b));
        grow_block(1ull << v, allowed | (1ull << v), frontier, 0, seen, 0);
    }
};

} // namespace detail

/// All inclusion-minimal multicuts, complete and duplicate-free, sorted in
/// the canonical lexicographic order. Enumerates partitions of the node set
/// into connected blocks (the components the deletion leaves behind) rather
/// than edge subsets; the cross-edge witness criterion gives minimality
/// directly and the search prunes far earlier than a subset filter.
inline std::vector<EdgeSet> enumerate_minimal_multicuts(const MulticutInstance& inst,
                                                        const Budget& budget = {}) {
    const Graph& g = inst.graph;
    if (g.node_count > 63)
        fail(errc::budget_exceeded, "partition enumeration is limited to 63 nodes");
    // Connected-block partitions inject into their cross-edge sets, so 2^|E|
    // bounds the partition count.
    if (g.edge_count() >= 62 || (1ll << g.edge_count()) > budget.max_partitions)
        fail(errc::budget_exceeded,
             "predicted partition count 2^" + std::to_string(g.edge_count()) +
                 " exceeds the enumeration budget");

    detail::PartitionEnum pe(inst, 64 * budget.max_partitions);
    pe.assign_next((1ull << g.node_count) - 1);
    std::sort(pe.out.begin(), pe.out.end(), lex_less);
    return pe.out;
}

struct MinCutResult {
    Rat value;
    EdgeSet cut;
};

/// Minimum weight over the enumerated minimal multicuts; ties broken by the
/// lexicographically smallest edge set. Exact, and the reference the solver
/// is validated against.
inline MinCutResult min_multicut_bruteforce(const MulticutInstance& inst, const WeightVector& w,
                                            const Budget& budget = {}) {
    check_weights(inst.graph, w);
    std::optional<MinCutResult> best;
    for (const EdgeSet& F : enumerate_minimal_multicuts(inst, budget)) {
        Rat value = 0;
        for (int e : F.indices()) value += w[e];
        if (!best || value < best->value) best = MinCutResult{value, F};
    }
    if (!best) fail(errc::empty_input, "no multicut exists (unexpected)");
    return *best;
}

/// Minimum s-t cut by augmenting paths on the undirected graph, exact over
/// the rationals. Returns the source-side cut: the edges leaving the set of
/// nodes residual-reachable from s, which is deterministic.
inline MinCutResult min_st_cut(const Graph& g, const WeightVector& w, int s, int t) {
    check_weights(g, w);
    if (s < 0 || s >= g.node_count || t < 0 || t >= g.node_count)
        fail(errc::node_out_of_range, "cut endpoint out of range");
    if (s == t) fail(errc::same_terminals, "min_st_cut needs two distinct terminals");

    // flow[e] is oriented along the canonical pair (u, v): positive = u -> v.
    std::vector<Rat> flow(g.edge_count(), Rat(0));
    auto residual = [&](int e, int from) -> Rat {
        if (g.edges[e].first == from) return w[e] - flow[e];
        return w[e] + flow[e];
    };
    auto push = [&](int e, int from, const Rat& amount) {
        if (g.edges[e].first == from)
            flow[e] += amount;
        else
            flow[e] -= amount;
    };

    Rat total = 0;
    for (;;) {
        std::vector<int> via_edge(g.node_count, -1), via_node(g.node_count, -1);
        std::vector<char> seen(g.node_count, 0);
        std::vector<int> queue = {s};
        seen[s] = 1;
        for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
            int u = queue[head];
            for (auto [nbr, e] : g.adj[u]) {
                if (seen[nbr] || residual(e, u) <= 0) continue;
                seen[nbr] = 1;
                via_edge[nbr] = e;
                via_node[nbr] = u;
                queue.push_back(nbr);
            }
        }
        if (!seen[t]) break;
        std::optional<Rat> bottleneck;
        for (int x = t; x != s; x = via_node[x]) {
            Rat r = residual(via_edge[x], via_node[x]);
            if (!bottleneck || r < *bottleneck) bottleneck = r;
        }
        for (int x = t; x != s; x = via_node[x]) push(via_edge[x], via_node[x], *bottleneck);
        total += *bottleneck;
    }

    std::vector<char> source_side(g.node_count, 0);
    std::vector<int> queue = {s};
    source_side[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (auto [nbr, e] : g.adj[u])
            if (!source_side[nbr] && residual(e, u) > 0) {
                source_side[nbr] = 1;
                queue.push_back(nbr);
            }
    }
    EdgeSet cut;
    for (int e = 0; e < g.edge_count(); ++e)
        if (source_side[g.edges[e].first] != source_side[g.edges[e].second]) cut.insert(e);
    return {total, cut};
}

/// Dispatcher: single pair -> max-flow, otherwise enumeration. The routes
/// agree exactly, which the tests pin down.
inline MinCutResult min_multicut_weighted(const MulticutInstance& inst, const WeightVector& w,
                                          const Budget& budget = {}) {
    check_weights(inst.graph, w);
    if (inst.pairs.empty()) return {Rat(0), EdgeSet{}};
    if (inst.pairs.size() == 1)
        return min_st_cut(inst.graph, w, inst.pairs[0].a, inst.pairs[0].b);
    return min_multicut_bruteforce(inst, w, budget);
}

} // namespace mcd

#endif

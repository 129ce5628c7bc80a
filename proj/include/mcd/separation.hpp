#ifndef MCD_SEPARATION_HPP
#define MCD_SEPARATION_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "mcd/error.hpp"
#include "mcd/graph.hpp"
#include "mcd/inequality.hpp"
#include "mcd/multicut.hpp"
#include "mcd/rational.hpp"

namespace mcd {

inline bool is_tree(const Graph& g) {
    return g.edge_count() == g.node_count - 1 && components(g).size() == 1;
}

/// Violated inequalities with their exact violation b - a^T x > 0, most
/// violated first, ties in canonical inequality order.
struct SeparationResult {
    std::vector<std::pair<LinearInequality, Rat>> violated;

    void add(LinearInequality q, Rat amount) {
        for (const auto& [have, amt] : violated)
            if (have == q) return;
        violated.emplace_back(std::move(q), std::move(amount));
    }
    void finish() {
        std::sort(violated.begin(), violated.end(), [](const auto& x, const auto& y) {
            if (x.second != y.second) return x.second > y.second;
            return canonical_less(x.first, y.first);
        });
    }
    bool empty() const { return violated.empty(); }
};

/// Path inequalities: for each terminal pair the x-shortest path decides
/// whether any path inequality is violated (all have rhs 1, so the shortest
/// path is the most violated candidate and the only one that matters).
inline SeparationResult separate_paths(const MulticutInstance& inst, const WeightVector& x) {
    check_weights(inst.graph, x);
    SeparationResult result;
    for (const NodePair& p : inst.pairs) {
        PathResult sp;
        try {
            sp = shortest_path(inst.graph, x, p.a, p.b);
        } catch (const Error& err) {
            if (err.code() == errc::unreachable) continue; // pair already cut
            throw;
        }
        if (sp.length < 1)
            result.add(gen_path_ineq(inst, sp.edges), Rat(1) - sp.length);
    }
    result.finish();
    return result;
}

namespace detail {

/// Rooted view of a tree: parents, parent edge indices, and for every node
/// the child of the root its subtree hangs from (-1 for the root).
struct RootedTree {
    std::vector<int> parent, parent_edge, branch, order;

    RootedTree(const Graph& g, int r)
        : parent(g.node_count, -1), parent_edge(g.node_count, -1), branch(g.node_count, -1) {
        order.push_back(r);
        for (std::size_t q = 0; q < order.size(); ++q) {
            int u = order[q];
            for (auto [nbr, e] : g.adj[u]) {
                if (nbr == r || parent[nbr] >= 0) continue;
                parent[nbr] = u;
                parent_edge[nbr] = e;
                branch[nbr] = u == r ? nbr : branch[u];
                order.push_back(nbr);
            }
        }
    }

    /// Edges of the unique path from the root down to v.
    std::vector<int> path_edges(int v) const {
        std::vector<int> out;
        for (int u = v; parent_edge[u] >= 0; u = parent[u]) out.push_back(parent_edge[u]);
        std::reverse(out.begin(), out.end());
        return out;
    }
    std::vector<int> path_nodes(int v) const {
        std::vector<int> out;
        int u = v;
        while (u >= 0) {
            out.push_back(u);
            u = parent[u];
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

/// S restricted to a node subset must consist of leaf-leaf pairs only;
/// returns false when any pair touches an internal or root node of the
/// embedding (the conservative drop), else collects the induced leaf pairs.
inline bool induced_pairs(const MulticutInstance& inst, const std::vector<char>& in_w,
                          const std::vector<char>& is_leaf, std::vector<NodePair>& leaf_pairs) {
    leaf_pairs.clear();
    for (const NodePair& p : inst.pairs) {
        if (!in_w[p.a] || !in_w[p.b]) continue;
        if (!is_leaf[p.a] || !is_leaf[p.b]) return false;
        leaf_pairs.push_back(p);
    }
    return true;
}

inline void check_tree_instance(const MulticutInstance& inst, const WeightVector& x) {
    check_weights(inst.graph, x);
    if (!is_tree(inst.graph)) fail(errc::not_a_tree, "separation routine requires a tree");
    if (inst.graph.node_count > 64)
        fail(errc::budget_exceeded, "family separation limited to 64 nodes");
}

} // namespace detail

/// Subdivided circular and complete k-star inequalities on a tree: every
/// embedding is a root r plus k target nodes in pairwise distinct child
/// subtrees of r (making the r-v_i paths share only r). The embedding
/// counts only if the terminal pairs induced on the embedded nodes live
/// entirely on the targets and form exactly the required pattern: all
/// binom(k,2) pairs (complete, rhs k-1) or a single k-cycle with k odd
/// (circular, rhs (k+1)/2).
inline SeparationResult separate_stars_on_tree(const MulticutInstance& inst, const WeightVector& x,
                                               int k, const Budget& budget = {}) {
    detail::check_tree_instance(inst, x);
    if (k < 3) fail(errc::too_small, "star separation needs k >= 3");
    if (k > budget.max_family_size) fail(errc::k_too_large, "star size exceeds the cap");
    const Graph& g = inst.graph;
    SeparationResult result;

    for (int r = 0; r < g.node_count; ++r) {
        detail::RootedTree rt(g, r);
        std::vector<int> leaves;
        std::vector<char> in_w(g.node_count, 0), is_leaf(g.node_count, 0);
        auto emit = [&]() {
            std::fill(in_w.begin(), in_w.end(), 0);
            std::fill(is_leaf.begin(), is_leaf.end(), 0);
            std::vector<int> edges;
            in_w[r] = 1;
            for (int v : leaves) {
                is_leaf[v] = 1;
                for (int u : rt.path_nodes(v)) in_w[u] = 1;
                for (int e : rt.path_edges(v)) edges.push_back(e);
            }
            std::vector<NodePair> leaf_pairs;
            if (!detail::induced_pairs(inst, in_w, is_leaf, leaf_pairs)) return;

            // Degree of each target in the induced pair pattern.
            auto deg = [&](int v) {
                int d = 0;
                for (const NodePair& p : leaf_pairs) d += p.a == v || p.b == v;
                return d;
            };
            bool complete = (int)leaf_pairs.size() == k * (k - 1) / 2;
            for (int v : leaves) complete = complete && deg(v) == k - 1;
            bool circular = false;
            if (!complete && k % 2 == 1 && (int)leaf_pairs.size() == k) {
                circular = true;
                for (int v : leaves) circular = circular && deg(v) == 2;
                // 2-regular on k nodes with k edges is a disjoint union of
                // cycles; it is a single cycle iff it is connected.
                if (circular) {
                    std::vector<int> stack{leaves[0]};
                    std::vector<char> seen(g.node_count, 0);
                    seen[leaves[0]] = 1;
                    int cnt = 1;
                    while (!stack.empty()) {
                        int u = stack.back();
                        stack.pop_back();
                        for (const NodePair& p : leaf_pairs) {
                            int other = p.a == u ? p.b : p.b == u ? p.a : -1;
                            if (other >= 0 && !seen[other]) {
                                seen[other] = 1;
                                ++cnt;
                                stack.push_back(other);
                            }
                        }
                    }
                    circular = cnt == k;
                }
            }
            if (!complete && !circular) return;

            LinearInequality q;
            q.coeffs.assign(g.edge_count(), Int(0));
            for (int e : edges) q.coeffs[e] = 1;
            q.rhs = complete ? k - 1 : (k + 1) / 2;
            q.provenance.family = complete ? "complete-star" : "circular-star";
            q.provenance.params = {{"k", k}};
            Rat gap = Rat(q.rhs) - evaluate(q, x);
            if (gap > 0) result.add(std::move(q), std::move(gap));
        };
        auto choose = [&](auto&& self, int from, std::uint64_t used_branches) -> void {
            if ((int)leaves.size() == k) {
                emit();
                return;
            }
            if (g.node_count - from < k - (int)leaves.size()) return;
            for (int v = from; v < g.node_count; ++v) {
                if (v == r) continue;
                std::uint64_t bit = std::uint64_t(1) << rt.branch[v];
                if (used_branches & bit) continue;
                leaves.push_back(v);
                self(self, v + 1, used_branches | bit);
                leaves.pop_back();
            }
        };
        choose(choose, 0, 0);
    }
    result.finish();
    return result;
}

/// Subdivided (l,k)-tree inequalities on a tree. An embedding is a root r,
/// inner nodes v_1..v_l in distinct child subtrees of r, and per unordered
/// inner pair {v_i, v_j} one terminal pair {s, t} in S with s strictly
/// below v_i and t strictly below v_j; the pendant paths below one inner
/// node must descend into distinct child subtrees, and no further terminal
/// pair may be induced on the embedded nodes. Each embedding yields one
/// inequality per 2 <= k < l: coefficient l-k on the r-v_i trunk edges, 1
/// on pendant edges, rhs k(l-k) + binom(l-k, 2).
inline SeparationResult separate_trees_on_tree(const MulticutInstance& inst, const WeightVector& x,
                                               int l, const Budget& budget = {}) {
    detail::check_tree_instance(inst, x);
    if (l < 3) fail(errc::too_small, "tree separation needs l >= 3");
    if (l > budget.max_family_size) fail(errc::l_too_large, "tree size exceeds the cap");
    const Graph& g = inst.graph;
    SeparationResult result;
    const int pair_slots = l * (l - 1) / 2;
    if (g.node_count < 1 + l + 2 * pair_slots) {
        result.finish();
        return result;
    }

    for (int r = 0; r < g.node_count; ++r) {
        detail::RootedTree rt(g, r);
        // below[v] = the inner node v lies strictly under, if unique.
        std::vector<int> inner;
        auto below = [&](int node) {
            for (int u = rt.parent[node]; u >= 0; u = rt.parent[u])
                for (std::size_t i = 0; i < inner.size(); ++i)
                    if (inner[i] == u) return (int)i;
            return -1;
        };
        std::vector<std::pair<int, int>> slots; // (i, j) with i < j
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) slots.emplace_back(i, j);
        std::vector<NodePair> chosen(pair_slots, NodePair{-1, -1}); // leaf at v_i, leaf at v_j

        auto emit = [&]() {
            // Pendant paths below one inner node must use distinct child
            // subtrees of that node; reuse branch logic by checking the
            // first step below the inner node.
            std::vector<std::vector<int>> first_step(l);
            std::vector<int> all_leaves;
            for (int s = 0; s < pair_slots; ++s) {
                auto [i, j] = slots[s];
                all_leaves.push_back(chosen[s].a);
                all_leaves.push_back(chosen[s].b);
                for (auto [owner, leaf] : {std::pair{i, chosen[s].a}, std::pair{j, chosen[s].b}}) {
                    int step = leaf;
                    while (rt.parent[step] != inner[owner]) step = rt.parent[step];
                    for (int other : first_step[owner])
                        if (other == step) return;
                    first_step[owner].push_back(step);
                }
            }
            std::sort(all_leaves.begin(), all_leaves.end());
            if (std::adjacent_find(all_leaves.begin(), all_leaves.end()) != all_leaves.end())
                return;

            std::vector<char> in_w(g.node_count, 0), is_leaf(g.node_count, 0);
            std::vector<int> trunk_edges, pendant_edges;
            in_w[r] = 1;
            for (int v : inner) {
                for (int u : rt.path_nodes(v)) in_w[u] = 1;
                for (int e : rt.path_edges(v)) trunk_edges.push_back(e);
            }
            for (int leaf : all_leaves) {
                is_leaf[leaf] = 1;
                std::vector<int> nodes = rt.path_nodes(leaf);
                for (int u : nodes)
                    if (!in_w[u]) {
                        in_w[u] = 1;
                        pendant_edges.push_back(rt.parent_edge[u]);
                    }
            }
            std::vector<NodePair> leaf_pairs;
            if (!detail::induced_pairs(inst, in_w, is_leaf, leaf_pairs)) return;
            if ((int)leaf_pairs.size() != pair_slots) return; // extra induced pair

            for (int k = 2; k < l; ++k) {
                LinearInequality q;
                q.coeffs.assign(g.edge_count(), Int(0));
                for (int e : trunk_edges) q.coeffs[e] = l - k;
                for (int e : pendant_edges) q.coeffs[e] = 1;
                q.rhs = Int(k) * (l - k) + Int(l - k) * (l - k - 1) / 2;
                q.provenance.family = "tree";
                q.provenance.params = {{"l", l}, {"k", k}};
                Rat gap = Rat(q.rhs) - evaluate(q, x);
                if (gap > 0) result.add(std::move(q), std::move(gap));
            }
        };
        auto assign_slot = [&](auto&& self, int s) -> void {
            if (s == pair_slots) {
                emit();
                return;
            }
            auto [i, j] = slots[s];
            for (const NodePair& p : inst.pairs) {
                for (auto [s_node, t_node] : {std::pair{p.a, p.b}, std::pair{p.b, p.a}}) {
                    if (below(s_node) != i || below(t_node) != j) continue;
                    chosen[s] = NodePair{s_node, t_node};
                    self(self, s + 1);
                }
            }
        };
        auto choose_inner = [&](auto&& self, int from, std::uint64_t used_branches) -> void {
            if ((int)inner.size() == l) {
                assign_slot(assign_slot, 0);
                return;
            }
            for (int v = from; v < g.node_count; ++v) {
                if (v == r) continue;
                std::uint64_t bit = std::uint64_t(1) << rt.branch[v];
                if (used_branches & bit) continue;
                inner.push_back(v);
                self(self, v + 1, used_branches | bit);
                inner.pop_back();
            }
        };
        choose_inner(choose_inner, 0, 0);
    }
    result.finish();
    return result;
}

/// Exact violation filter over an explicit inequality pool.
inline SeparationResult separate_pool(const WeightVector& x,
                                      const std::vector<LinearInequality>& pool) {
    SeparationResult result;
    for (const LinearInequality& q : pool) {
        if (q.dimension() != (int)x.size())
            fail(errc::dimension_mismatch, "pool inequality dimension != point dimension");
        Rat lhs = evaluate(q, x);
        if (lhs < Rat(q.rhs)) result.add(q, Rat(q.rhs) - lhs);
    }
    result.finish();
    return result;
}

} // namespace mcd

#endif

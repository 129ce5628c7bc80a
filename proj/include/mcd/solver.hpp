#ifndef MCD_SOLVER_HPP
#define MCD_SOLVER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mcd/budget.hpp"
#include "mcd/edgeset.hpp"
#include "mcd/error.hpp"
#include "mcd/graph.hpp"
#include "mcd/inequality.hpp"
#include "mcd/multicut.hpp"
#include "mcd/rational.hpp"
#include "mcd/separation.hpp"
#include "mcd/simplex.hpp"

namespace mcd {

struct SolveStats {
    long lp_pivots = 0;
    long lp_solves = 0;
    long branch_nodes = 0;
    std::map<std::string, long> cuts_added;
    Rat final_bound;
};

struct SolverConfig {
    /// Star/tree family separation on tree instances (paths always run).
    bool tree_families = true;
    Budget budget;
};

struct SolveResult {
    EdgeSet cut;
    Rat value;
    SolveStats stats;
};

namespace detail {

/// Greedy minimalization: drop edges in increasing weight order (ties by
/// index) as long as the remainder still cuts every pair.
inline EdgeSet minimalize(const MulticutInstance& inst, EdgeSet F, const WeightVector& w) {
    std::vector<int> order = F.indices();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (w[a] != w[b]) return w[a] < w[b];
        return a < b;
    });
    for (int e : order) {
        EdgeSet without = F;
        without.erase(e);
        if (is_multicut(inst, without)) F = without;
    }
    return F;
}

struct BranchFrame {
    std::vector<LinearInequality> rows; // branch fixings, valid in this subtree only
    std::vector<char> fixed;            // per edge: already branched on
};

} // namespace detail

/// Exact branch-and-cut minimum multicut. The LP relaxation starts from the
/// edge inequalities and grows by separated path (and, on trees, star/tree
/// family) cuts; fractional optima trigger branching on x_e = 0 versus
/// x_e >= 1, taking the variable closest to 1/2. Cut rows are globally valid
/// and kept for the whole run; branch fixings stay local to their subtree.
inline SolveResult solve_min_multicut(const MulticutInstance& inst, const WeightVector& w,
                                      const SolverConfig& config = {}) {
    check_weights(inst.graph, w);
    const int m = inst.graph.edge_count();
    SolveResult best;
    bool have_incumbent = false;
    SolveStats& stats = best.stats;

    std::vector<LinearInequality> pool;
    std::set<std::pair<std::vector<Int>, Int>> pool_seen;
    auto pool_add = [&](LinearInequality q, const std::string& family) {
        q.normalize();
        if (!pool_seen.insert({q.coeffs, q.rhs}).second) return false;
        pool.push_back(std::move(q));
        stats.cuts_added[family]++;
        return true;
    };
    for (int e = 0; e < m; ++e) pool_add(gen_edge_ineq(inst, e), "edge");

    // Family separation needs the branch bitmasks, hence the 64-node cap.
    bool tree_graph =
        config.tree_families && inst.graph.node_count <= 64 && is_tree(inst.graph);

    auto solve_node = [&](auto&& self, detail::BranchFrame frame) -> void {
        ++stats.branch_nodes;
        for (;;) {
            LPProblem lp(m);
            lp.objective.assign(w.begin(), w.end());
            for (const LinearInequality& row : pool) lp.add_row(row);
            for (const LinearInequality& row : frame.rows) lp.add_row(row);
            LPSolution sol = lp_solve(lp);
            ++stats.lp_solves;
            stats.lp_pivots += sol.pivots;
            if (sol.status == LPStatus::Infeasible) return;
            // w >= 0 over x >= 0 cannot be unbounded below, so sol is Optimal.
            if (have_incumbent && sol.objective >= best.value) return;

            bool added = false;
            for (auto& [q, gap] : separate_paths(inst, sol.x).violated)
                added |= pool_add(std::move(q), "path");
            if (!added && tree_graph) {
                for (int k = 3; k <= config.budget.max_family_size && k < inst.graph.node_count;
                     ++k)
                    for (auto& [q, gap] :
                         separate_stars_on_tree(inst, sol.x, k, config.budget).violated) {
                        std::string family = q.provenance.family;
                        added |= pool_add(std::move(q), family);
                    }
                for (int l = 3; l <= config.budget.max_family_size; ++l) {
                    if (inst.graph.node_count < 1 + l + l * (l - 1)) break;
                    for (auto& [q, gap] :
                         separate_trees_on_tree(inst, sol.x, l, config.budget).violated)
                        added |= pool_add(std::move(q), "tree");
                }
            }
            if (added) continue;

            int branch_var = -1;
            Rat best_dist;
            for (int e = 0; e < m; ++e) {
                if (frame.fixed[e] || sol.x[e].get_den() == 1) continue;
                Rat dist = abs(sol.x[e] - Rat(1, 2));
                if (branch_var < 0 || dist < best_dist) {
                    branch_var = e;
                    best_dist = dist;
                }
            }
            if (branch_var < 0) {
                // No violated path inequality means every terminal pair is at
                // x-distance >= 1, so the support cuts all pairs. With no
                // branchable fractional variable left, round to the support.
                EdgeSet support;
                for (int e = 0; e < m; ++e)
                    if (sol.x[e] > 0) support.insert(e);
                if (!is_multicut(inst, support))
                    fail(errc::not_valid, "LP support is not a multicut; separation incomplete");
                EdgeSet cut = detail::minimalize(inst, support, w);
                Rat value(0);
                for (int e : cut.indices()) value += w[e];
                if (!have_incumbent || value < best.value) {
                    best.cut = cut;
                    best.value = value;
                    have_incumbent = true;
                }
                return;
            }

            // Branch, x_e >= 1 first. Fixing to zero contradicts the edge
            // inequality when the endpoints are a terminal pair, so that
            // child is skipped outright.
            auto [u, v] = inst.graph.edges[branch_var];
            detail::BranchFrame up = frame;
            up.fixed[branch_var] = 1;
            LinearInequality one;
            one.coeffs.assign(m, Int(0));
            one.coeffs[branch_var] = 1;
            one.rhs = 1;
            up.rows.push_back(std::move(one));
            self(self, std::move(up));

            if (!is_pair(inst, u, v)) {
                detail::BranchFrame zero = std::move(frame);
                zero.fixed[branch_var] = 1;
                LinearInequality none;
                none.coeffs.assign(m, Int(0));
                none.coeffs[branch_var] = -1;
                none.rhs = 0;
                zero.rows.push_back(std::move(none));
                self(self, std::move(zero));
            }
            return;
        }
    };

    detail::BranchFrame root;
    root.fixed.assign(m, 0);
    solve_node(solve_node, std::move(root));

    if (!have_incumbent) fail(errc::not_valid, "no multicut found; internal error");
    stats.final_bound = best.value;
    return best;
}

/// LP bound from selected inequality families only. Family members are
/// instantiated exhaustively on the instance: edge bounds, every simple
/// terminal path, star/tree embeddings on trees (enumerated by separating
/// the origin, which every member cuts off), the odd cycle inequality, and
/// the Wagner variants on canonically labeled antipodal even cycles.
/// Selectors: edge, path, star, tree, cycle, wagner, generalized-wagner.
inline Rat lower_bound_report(const MulticutInstance& inst, const WeightVector& w,
                              const std::vector<std::string>& families,
                              const Budget& budget = {}) {
    check_weights(inst.graph, w);
    const int m = inst.graph.edge_count();
    const Graph& g = inst.graph;
    LPProblem lp(m);
    lp.objective.assign(w.begin(), w.end());
    WeightVector origin(m, Rat(0));

    static const std::vector<std::string> known = {
        "edge", "path", "star", "tree", "cycle", "wagner", "generalized-wagner"};
    for (const std::string& f : families)
        if (std::find(known.begin(), known.end(), f) == known.end())
            fail(errc::parse_error, "unknown inequality family '" + f + "'");
    auto has = [&](const char* name) {
        return std::find(families.begin(), families.end(), name) != families.end();
    };

    if (has("edge"))
        for (int e = 0; e < m; ++e) lp.add_row(gen_edge_ineq(inst, e));
    if (has("path")) {
        // All simple s-t paths per pair, by depth-first search.
        for (const NodePair& p : inst.pairs) {
            std::vector<char> visited(g.node_count, 0);
            std::vector<int> seq;
            visited[p.a] = 1;
            auto dfs = [&](auto&& self, int u) -> void {
                if (u == p.b) {
                    lp.add_row(gen_path_ineq(inst, seq));
                    return;
                }
                for (auto [nbr, e] : g.adj[u]) {
                    if (visited[nbr]) continue;
                    visited[nbr] = 1;
                    seq.push_back(e);
                    self(self, nbr);
                    seq.pop_back();
                    visited[nbr] = 0;
                }
            };
            dfs(dfs, p.a);
        }
    }
    if ((has("star") || has("tree")) && g.node_count <= 64 && is_tree(g)) {
        if (has("star"))
            for (int k = 3; k <= budget.max_family_size && k < g.node_count; ++k)
                for (auto& [q, gap] : separate_stars_on_tree(inst, origin, k, budget).violated)
                    lp.add_row(q);
        if (has("tree"))
            for (int l = 3; l <= budget.max_family_size && g.node_count >= 1 + l + l * (l - 1);
                 ++l)
                for (auto& [q, gap] : separate_trees_on_tree(inst, origin, l, budget).violated)
                    lp.add_row(q);
    }

    // Cycle-supported families need the whole graph to be one cycle.
    bool cycle = m == g.node_count && m >= 3 && components(g).size() == 1;
    for (int v = 0; cycle && v < g.node_count; ++v) cycle = g.adj[v].size() == 2;

    if (cycle && has("cycle") && g.node_count % 2 == 1 && g.node_count >= 5) {
        // The odd cycle inequality needs every non-adjacent node pair to be
        // a terminal pair (label-independent check).
        bool host = true;
        for (int u = 0; u < g.node_count && host; ++u)
            for (int v = u + 1; v < g.node_count && host; ++v)
                if (edge_index(g, u, v) < 0 && !is_pair(inst, u, v)) host = false;
        if (host) {
            LinearInequality q;
            q.coeffs.assign(m, Int(1));
            q.rhs = (g.node_count + 1) / 2;
            q.provenance.family = "odd-cycle";
            lp.add_row(std::move(q));
        }
    }
    if (cycle && (has("wagner") || has("generalized-wagner")) && g.node_count % 2 == 0) {
        // Wagner rows apply to the canonical labeling: edges {i, i+1 mod 2N},
        // pairs {i, i+N}. Generator output is compared edge-for-edge.
        int N = g.node_count / 2;
        bool antipodal = static_cast<int>(inst.pairs.size()) == N;
        for (const NodePair& p : inst.pairs) antipodal = antipodal && p.b == p.a + N;
        if (antipodal) {
            auto add_variant = [&](const Generated& gen) {
                if (gen.instance.graph.edges == g.edges) lp.add_row(gen.ineq);
            };
            for (int beta : {1, 2}) {
                if (has("wagner") && N >= 5 && N % 2 == 1) add_variant(gen_wagner(N, beta));
                if (has("generalized-wagner")) {
                    for (int n = 5; n <= N; n += 2) {
                        std::vector<int> breaks;
                        auto rec = [&](auto&& self, int prev, int left) -> void {
                            if (left == 1) {
                                breaks.push_back(N);
                                add_variant(gen_generalized_wagner(n, N, breaks, beta));
                                breaks.pop_back();
                                return;
                            }
                            for (int b = prev + 1; b + left - 1 <= N; ++b) {
                                breaks.push_back(b);
                                self(self, b, left - 1);
                                breaks.pop_back();
                            }
                        };
                        rec(rec, 0, n);
                    }
                }
            }
        }
    }

    LPSolution sol = lp_solve(lp);
    if (sol.status != LPStatus::Optimal)
        fail(errc::not_valid, "family LP must be feasible and bounded");
    return sol.objective;
}

} // namespace mcd

#endif

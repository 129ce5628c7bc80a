#ifndef MCD_LIFTING_HPP
#define MCD_LIFTING_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcd/budget.hpp"
#include "mcd/error.hpp"
#include "mcd/facet.hpp"
#include "mcd/graph.hpp"
#include "mcd/hull.hpp"
#include "mcd/inequality.hpp"
#include "mcd/multicut.hpp"
#include "mcd/rational.hpp"

namespace mcd {

/// Outcome of a facet transfer. `hypotheses_ok` records whether the
/// structural hypotheses of the underlying transfer theorem were verified
/// (facetness of the *input* is the caller's obligation and is never checked
/// here unless documented otherwise); `shared_hypotheses_ok` does the same
/// for the shared-facet variant. `notes` lists every hypothesis that failed.
struct LiftResult {
    MulticutInstance instance;
    LinearInequality ineq;
    std::optional<Rat> omega;
    SurgeryMap map;
    int new_node = -1;
    int new_edge = -1;
    bool hypotheses_ok = true;
    bool shared_hypotheses_ok = false;
    std::vector<std::string> notes;
};

namespace detail {

inline void check_dimension(const MulticutInstance& inst, const LinearInequality& q) {
    if (q.dimension() != inst.graph.edge_count())
        fail(errc::dimension_mismatch, "inequality dimension != instance edge count");
}

} // namespace detail

/// Zero-lifting into a supergraph: coefficients are extended by zeros and
/// validity carries over; when the target's terminal pairs restricted to the
/// subgraph nodes equal the subgraph's pairs exactly, facetness carries over
/// too. The subgraph is identified by node ids: the first node_count nodes
/// of the target are the subgraph's nodes, and every subgraph edge must
/// exist in the target.
///
/// Errors: NotASubgraph when an edge (or node) of inst is missing in the
/// target; TerminalMismatch when a pair of inst is not a pair of the target
/// (validity itself would be unfounded then). Extra target pairs inside the
/// subgraph only void the facet-transfer hypothesis and are reported via
/// hypotheses_ok = false.
///
/// The shared-facet transfer needs more: the subgraph induced, no target
/// edge outside it joining a terminal pair, and no target pair {s, t} with s
/// a subgraph node and t an outside node adjacent to the subgraph.
inline LiftResult lift_zero(const MulticutInstance& inst, const LinearInequality& ineq,
                            const MulticutInstance& target) {
    detail::check_dimension(inst, ineq);
    const Graph& h = inst.graph;
    const Graph& g = target.graph;
    if (h.node_count > g.node_count)
        fail(errc::not_a_subgraph, "subgraph has more nodes than the target");
    for (auto [u, v] : h.edges)
        if (edge_index(g, u, v) < 0)
            fail(errc::not_a_subgraph, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                           "} is missing in the target");

    LiftResult out;
    auto in_w = [&](int x) { return x < h.node_count; };

    for (const NodePair& p : inst.pairs)
        if (!is_pair(target, p.a, p.b))
            fail(errc::terminal_mismatch, "pair {" + std::to_string(p.a) + "," +
                                              std::to_string(p.b) +
                                              "} of the subgraph is not a target pair");
    for (const NodePair& p : target.pairs)
        if (in_w(p.a) && in_w(p.b) && !is_pair(inst, p.a, p.b)) {
            out.hypotheses_ok = false;
            out.notes.push_back("target pair {" + std::to_string(p.a) + "," +
                                std::to_string(p.b) +
                                "} lies inside the subgraph but is not one of its pairs");
        }

    bool shared_ok = out.hypotheses_ok;
    for (auto [u, v] : g.edges) {
        if (in_w(u) && in_w(v) && edge_index(h, u, v) < 0) {
            shared_ok = false;
            out.notes.push_back("subgraph is not induced: target edge {" + std::to_string(u) +
                                "," + std::to_string(v) + "} is missing");
        }
        if (edge_index(h, u, v) < 0 && is_pair(target, u, v)) {
            shared_ok = false;
            out.notes.push_back("outside edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} joins a terminal pair");
        }
    }
    for (const NodePair& p : target.pairs) {
        for (auto [s, t] : {std::pair{p.a, p.b}, std::pair{p.b, p.a}}) {
            if (!in_w(s) || in_w(t)) continue;
            bool adjacent = false;
            for (auto [nbr, e] : g.adj[t]) adjacent = adjacent || in_w(nbr);
            if (adjacent) {
                shared_ok = false;
                out.notes.push_back("pair {" + std::to_string(p.a) + "," + std::to_string(p.b) +
                                    "} has one end inside and the other adjacent to the subgraph");
            }
        }
    }
    out.shared_hypotheses_ok = shared_ok;

    std::vector<Int> coeffs(g.edge_count(), 0);
    out.map.edge_map.assign(h.edge_count(), {});
    for (int e = 0; e < h.edge_count(); ++e) {
        int image = edge_index(g, h.edges[e].first, h.edges[e].second);
        coeffs[image] = ineq.coeffs[e];
        out.map.edge_map[e] = {image};
    }
    out.map.node_map.assign(h.node_count, {});
    for (int v = 0; v < h.node_count; ++v) out.map.node_map[v] = {v};
    out.instance = target;
    out.ineq = make_inequality(std::move(coeffs), ineq.rhs, ineq.provenance);
    return out;
}

/// Restriction to the support subgraph: the inverse direction of zero
/// lifting. The input must be facet-defining (verified here, unlike the
/// other transfers, because the restriction theorem has no valid-only
/// reading); the result lives on the subgraph spanned by the support edges
/// with the induced terminal pairs, and is facet-defining there.
inline LiftResult restrict_to_support(const MulticutInstance& inst, const LinearInequality& ineq,
                                      const Budget& budget = {}) {
    detail::check_dimension(inst, ineq);
    if (!is_facet(inst, ineq, budget))
        fail(errc::not_a_facet, "restriction requires a facet-defining inequality");
    const Graph& g = inst.graph;

    EdgeSet supp = ineq.support();
    std::vector<int> rank(g.node_count, -1);
    std::vector<int> kept;
    for (int e : supp.indices()) {
        for (int x : {g.edges[e].first, g.edges[e].second})
            if (rank[x] < 0) {
                rank[x] = 0;
                kept.push_back(x);
            }
    }
    std::sort(kept.begin(), kept.end());
    for (std::size_t i = 0; i < kept.size(); ++i) rank[kept[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (int e : supp.indices()) edges.emplace_back(rank[g.edges[e].first], rank[g.edges[e].second]);
    Graph sub = build_graph(static_cast<int>(kept.size()), std::move(edges));

    std::vector<NodePair> pairs;
    for (const NodePair& p : inst.pairs)
        if (rank[p.a] >= 0 && rank[p.b] >= 0)
            pairs.push_back(make_pair_canonical(rank[p.a], rank[p.b]));

    LiftResult out;
    std::vector<Int> coeffs(sub.edge_count(), 0);
    out.map.edge_map.assign(g.edge_count(), {});
    for (int e : supp.indices()) {
        int image = edge_index(sub, rank[g.edges[e].first], rank[g.edges[e].second]);
        coeffs[image] = ineq.coeffs[e];
        out.map.edge_map[e] = {image};
    }
    out.map.node_map.assign(g.node_count, {});
    for (int v = 0; v < g.node_count; ++v)
        if (rank[v] >= 0) out.map.node_map[v] = {rank[v]};
    out.instance = build_instance(std::move(sub), std::move(pairs));
    out.ineq = make_inequality(std::move(coeffs), ineq.rhs, ineq.provenance);
    out.hypotheses_ok = true; // facetness of the input was verified above
    return out;
}

/// Choice for one terminal pair {v, t} when v is split: keep the pair at v1,
/// at v2, at both (default), or drop it entirely (both false).
struct PairChoice {
    bool to_v1 = true;
    bool to_v2 = true;
};

/// Node splitting: v becomes v1 = v and a fresh v2 joined by a new edge; the
/// incident edges are distributed by side_assignment, each pair {v, t} is
/// replaced by the chosen subset of {{v1,t}, {v2,t}}, and the new edge gets
/// the coefficient b - omega, where omega is the exact minimum multicut of
/// the new terminal set in the split graph minus the new edge under the old
/// coefficients as weights. Facetness transfers whenever the input was
/// facet-defining, and the shared property likewise; b - omega >= 0 is a
/// theorem and its violation therefore an internal error, not a report.
inline LiftResult lift_node_split(const MulticutInstance& inst, const LinearInequality& ineq,
                                  int v, const std::map<int, int>& side_assignment,
                                  const std::map<int, PairChoice>& pair_replacement = {},
                                  const Budget& budget = {}) {
    detail::check_dimension(inst, ineq);
    const Graph& g = inst.graph;
    if (v < 0 || v >= g.node_count) fail(errc::invalid_node, "no node " + std::to_string(v));
    bool in_support = false;
    for (auto [nbr, e] : g.adj[v]) in_support = in_support || ineq.coeffs[e] != 0;
    if (!in_support)
        fail(errc::node_not_in_support,
             "node " + std::to_string(v) + " is incident to no support edge");
    for (const auto& [t, choice] : pair_replacement)
        if (!is_pair(inst, v, t))
            fail(errc::incomplete_assignment, "pair_replacement mentions {" + std::to_string(v) +
                                                  "," + std::to_string(t) +
                                                  "} which is not a terminal pair");

    Surgery split = split_node(g, v, side_assignment);
    const int v2 = split.new_node;

    std::vector<NodePair> new_pairs;
    for (const NodePair& p : inst.pairs) {
        if (p.a != v && p.b != v) {
            new_pairs.push_back(p);
            continue;
        }
        int t = p.a == v ? p.b : p.a;
        PairChoice choice;
        if (auto it = pair_replacement.find(t); it != pair_replacement.end()) choice = it->second;
        if (choice.to_v1) new_pairs.push_back(make_pair_canonical(v, t));
        if (choice.to_v2) new_pairs.push_back(make_pair_canonical(v2, t));
    }

    // omega: minimum multicut of the new pairs in the split graph minus the
    // new edge, weighted by the old coefficients carried through the edge
    // bijection.
    std::vector<std::pair<int, int>> reduced_edges;
    for (int f = 0; f < split.graph.edge_count(); ++f)
        if (f != split.new_edge) reduced_edges.push_back(split.graph.edges[f]);
    Graph reduced = build_graph(split.graph.node_count, std::move(reduced_edges));
    auto reduced_index = [&](int f) { return f < split.new_edge ? f : f - 1; };
    WeightVector w(reduced.edge_count(), Rat(0));
    for (int e = 0; e < g.edge_count(); ++e)
        w[reduced_index(split.map.edge_map[e][0])] = Rat(ineq.coeffs[e]);
    MulticutInstance reduced_inst = build_instance(std::move(reduced), new_pairs);
    Rat omega = min_multicut_weighted(reduced_inst, w, budget).value;

    Rat new_coeff = Rat(ineq.rhs) - omega;
    if (new_coeff < 0)
        fail(errc::not_valid,
             "b - omega < 0; the input inequality cannot have been facet-defining");
    if (new_coeff.get_den() != 1)
        fail(errc::not_valid, "omega must be integral under integer coefficients");

    LiftResult out;
    std::vector<Int> coeffs(split.graph.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) coeffs[split.map.edge_map[e][0]] = ineq.coeffs[e];
    coeffs[split.new_edge] = new_coeff.get_num();
    out.instance = build_instance(std::move(split.graph), std::move(new_pairs));
    out.ineq = make_inequality(std::move(coeffs), ineq.rhs, ineq.provenance);
    out.omega = omega;
    out.map = std::move(split.map);
    out.new_node = v2;
    out.new_edge = split.new_edge;
    out.hypotheses_ok = true;
    out.shared_hypotheses_ok = true; // the theorem transfers sharedness as-is
    if (new_coeff == 0)
        out.notes.push_back("b - omega = 0: the new edge leaves the support");
    return out;
}

/// Edge subdivision, generalized to replacement by a path of any length:
/// the old coefficient is copied onto every path edge and the right-hand
/// side stays. Facet and shared transfer unconditionally (given facet
/// input); length 1 is the identity.
inline LiftResult lift_subdivide(const MulticutInstance& inst, const LinearInequality& ineq,
                                 int e, int length) {
    detail::check_dimension(inst, ineq);
    Surgery surgery = replace_edge_by_path(inst.graph, e, length);

    LiftResult out;
    std::vector<Int> coeffs(surgery.graph.edge_count(), 0);
    for (int f = 0; f < inst.graph.edge_count(); ++f)
        for (int image : surgery.map.edge_map[f]) coeffs[image] = ineq.coeffs[f];
    out.instance = build_instance(std::move(surgery.graph), inst.pairs);
    out.ineq = make_inequality(std::move(coeffs), ineq.rhs, ineq.provenance);
    out.map = std::move(surgery.map);
    out.new_node = surgery.new_node;
    out.hypotheses_ok = true;
    out.shared_hypotheses_ok = true;
    return out;
}

/// Contraction of a connected subgraph H onto a single edge st: the inverse
/// of path replacement, generalized. H is given by edge indices; it must
/// attach to the rest of the graph only at s and t (BadAttachment
/// otherwise), contain no terminal other than possibly s, t (TerminalInside
/// otherwise), and the replacing edge must not already exist outside H; the
/// new coefficient is omega, the exact minimum s-t cut in H under the old
/// coefficients.
inline LiftResult contract_subgraph_to_edge(const MulticutInstance& inst,
                                            const LinearInequality& ineq,
                                            const std::vector<int>& h_edges, int s, int t) {
    detail::check_dimension(inst, ineq);
    const Graph& g = inst.graph;
    if (h_edges.empty()) fail(errc::empty_input, "subgraph needs at least one edge");
    std::vector<char> in_h(g.edge_count(), 0);
    for (int e : h_edges) {
        if (e < 0 || e >= g.edge_count()) fail(errc::invalid_edge, "no edge " + std::to_string(e));
        if (in_h[e]) fail(errc::duplicate_edge, "edge " + std::to_string(e) + " listed twice");
        in_h[e] = 1;
    }
    if (s < 0 || s >= g.node_count || t < 0 || t >= g.node_count || s == t)
        fail(errc::bad_attachment, "attachment nodes must be two distinct nodes");

    std::vector<int> rank(g.node_count, -1);
    std::vector<int> h_nodes;
    for (int e : h_edges)
        for (int x : {g.edges[e].first, g.edges[e].second})
            if (rank[x] < 0) {
                rank[x] = 0;
                h_nodes.push_back(x);
            }
    std::sort(h_nodes.begin(), h_nodes.end());
    for (std::size_t i = 0; i < h_nodes.size(); ++i) rank[h_nodes[i]] = static_cast<int>(i);
    if (rank[s] < 0 || rank[t] < 0)
        fail(errc::bad_attachment, "attachment nodes must lie in the subgraph");

    std::vector<std::pair<int, int>> h_edge_list;
    for (int e : h_edges) h_edge_list.emplace_back(rank[g.edges[e].first], rank[g.edges[e].second]);
    Graph h = build_graph(static_cast<int>(h_nodes.size()), h_edge_list);
    if (components(h).size() != 1) fail(errc::bad_attachment, "subgraph must be connected");

    auto interior = [&](int x) { return rank[x] >= 0 && x != s && x != t; };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_h[e]) continue;
        auto [u, v] = g.edges[e];
        if (interior(u) || interior(v))
            fail(errc::bad_attachment, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                           "} attaches to the subgraph interior");
        if (make_pair_canonical(u, v) == make_pair_canonical(s, t))
            fail(errc::bad_attachment,
                 "the replacing edge already exists outside the subgraph");
    }
    for (const NodePair& p : inst.pairs)
        for (int x : {p.a, p.b})
            if (interior(x))
                fail(errc::terminal_inside,
                     "terminal " + std::to_string(x) + " lies inside the subgraph");

    WeightVector hw(h.edge_count(), Rat(0));
    for (std::size_t i = 0; i < h_edges.size(); ++i)
        hw[edge_index(h, h_edge_list[i].first, h_edge_list[i].second)] = Rat(ineq.coeffs[h_edges[i]]);
    Rat omega = min_st_cut(h, hw, rank[s], rank[t]).value;
    if (omega.get_den() != 1)
        fail(errc::not_valid, "omega must be integral under integer coefficients");

    // Interior nodes vanish; the survivors are compressed in id order.
    std::vector<int> node_image(g.node_count, -1);
    int next = 0;
    for (int x = 0; x < g.node_count; ++x)
        if (!interior(x)) node_image[x] = next++;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_h[e]) edges.emplace_back(node_image[g.edges[e].first], node_image[g.edges[e].second]);
    edges.emplace_back(std::min(node_image[s], node_image[t]),
                       std::max(node_image[s], node_image[t]));
    Graph contracted = build_graph(next, std::move(edges));
    int st_index = edge_index(contracted, node_image[s], node_image[t]);

    std::vector<NodePair> pairs;
    for (const NodePair& p : inst.pairs)
        pairs.push_back(make_pair_canonical(node_image[p.a], node_image[p.b]));

    LiftResult out;
    std::vector<Int> coeffs(contracted.edge_count(), 0);
    out.map.edge_map.assign(g.edge_count(), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_h[e]) {
            out.map.edge_map[e] = {st_index};
            continue;
        }
        int image = edge_index(contracted, node_image[g.edges[e].first],
                               node_image[g.edges[e].second]);
        coeffs[image] = ineq.coeffs[e];
        out.map.edge_map[e] = {image};
    }
    coeffs[st_index] = omega.get_num();
    out.map.node_map.assign(g.node_count, {});
    for (int x = 0; x < g.node_count; ++x)
        if (node_image[x] >= 0) out.map.node_map[x] = {node_image[x]};
    out.instance = build_instance(std::move(contracted), std::move(pairs));
    out.ineq = make_inequality(std::move(coeffs), ineq.rhs, ineq.provenance);
    out.omega = omega;
    out.new_edge = st_index;
    out.hypotheses_ok = true;
    return out;
}

/// Replaces edge e = {u, v} by a connected graph `h` glued at hs -> u and
/// ht -> v; all other nodes of h are fresh. Terminal pairs carry over
/// unchanged. Exposes where the embedded edges and nodes landed.
struct EmbedResult {
    MulticutInstance instance;
    SurgeryMap map;                // of the original instance's edges / nodes
    std::vector<int> h_edge_image; // h edge index -> new edge index
    std::vector<int> h_node_image; // h node index -> new node id
};

inline EmbedResult replace_edge_by_graph(const MulticutInstance& inst, int e, const Graph& h,
                                         int hs, int ht) {
    const Graph& g = inst.graph;
    if (e < 0 || e >= g.edge_count()) fail(errc::invalid_edge, "no edge " + std::to_string(e));
    if (hs < 0 || hs >= h.node_count || ht < 0 || ht >= h.node_count || hs == ht)
        fail(errc::bad_attachment, "attachment nodes must be two distinct nodes of the patch");
    if (h.node_count < 2 || components(h).size() != 1)
        fail(errc::bad_attachment, "patch must be connected");
    auto [u, v] = g.edges[e];

    EmbedResult out;
    out.h_node_image.assign(h.node_count, -1);
    out.h_node_image[hs] = u;
    out.h_node_image[ht] = v;
    int next = g.node_count;
    for (int x = 0; x < h.node_count; ++x)
        if (out.h_node_image[x] < 0) out.h_node_image[x] = next++;

    std::vector<std::pair<int, int>> edges;
    for (int f = 0; f < g.edge_count(); ++f)
        if (f != e) edges.push_back(g.edges[f]);
    for (auto [x, y] : h.edges) edges.emplace_back(std::min(out.h_node_image[x], out.h_node_image[y]),
                                                   std::max(out.h_node_image[x], out.h_node_image[y]));
    Graph embedded = build_graph(next, std::move(edges));

    out.map.edge_map.assign(g.edge_count(), {});
    for (int f = 0; f < g.edge_count(); ++f)
        if (f != e)
            out.map.edge_map[f] = {edge_index(embedded, g.edges[f].first, g.edges[f].second)};
    out.map.node_map.assign(g.node_count, {});
    for (int x = 0; x < g.node_count; ++x) out.map.node_map[x] = {x};
    out.h_edge_image.assign(h.edge_count(), -1);
    for (int f = 0; f < h.edge_count(); ++f)
        out.h_edge_image[f] = edge_index(embedded, out.h_node_image[h.edges[f].first],
                                         out.h_node_image[h.edges[f].second]);
    out.instance = build_instance(std::move(embedded), inst.pairs);
    return out;
}

/// Evidence harness for the conjecture that replacing an edge by a connected
/// graph creates no facets beyond edge inequalities and path-replacement
/// lifts of the original facets. Computes both facet descriptions exactly
/// and classifies; `unexplained` facets are conjecture counterexamples,
/// `missing_lifts` would indicate an internal error (every path lift is
/// provably a facet). Findings are reported, never asserted.
struct TwoComponentReport {
    bool consistent = true;  // every facet of the new graph is explained
    bool internal_ok = true; // every path lift shows up among the facets
    MulticutInstance embedded;
    std::vector<LinearInequality> unexplained;
    std::vector<LinearInequality> missing_lifts;
    long facet_count = 0;
    long candidate_count = 0;
};

inline TwoComponentReport check_2component(const MulticutInstance& inst, int e, const Graph& h,
                                           int hs, int ht, const Budget& budget = {}) {
    EmbedResult embed = replace_edge_by_graph(inst, e, h, hs, ht);
    TwoComponentReport report;
    report.embedded = embed.instance;
    const int new_m = embed.instance.graph.edge_count();

    // All simple hs-ht paths in the patch, as patch edge index lists.
    std::vector<std::vector<int>> paths;
    {
        std::vector<char> visited(h.node_count, 0);
        std::vector<int> seq;
        visited[hs] = 1;
        auto dfs = [&](auto&& self, int x) -> void {
            if (x == ht) {
                paths.push_back(seq);
                return;
            }
            for (auto [nbr, f] : h.adj[x]) {
                if (visited[nbr]) continue;
                visited[nbr] = 1;
                seq.push_back(f);
                self(self, nbr);
                seq.pop_back();
                visited[nbr] = 0;
            }
        };
        dfs(dfs, hs);
    }

    std::set<std::pair<std::vector<Int>, Int>> explained, lifts;
    for (int f = 0; f < new_m; ++f) {
        LinearInequality q = gen_edge_ineq(embed.instance, f);
        explained.insert({q.coeffs, q.rhs});
    }
    for (const LinearInequality& base : dominant_hrep(inst, budget).facets) {
        for (const std::vector<int>& path : paths) {
            std::vector<Int> coeffs(new_m, 0);
            for (int f = 0; f < inst.graph.edge_count(); ++f)
                if (f != e) coeffs[embed.map.edge_map[f][0]] = base.coeffs[f];
            for (int f : path) coeffs[embed.h_edge_image[f]] = base.coeffs[e];
            LinearInequality q = make_inequality(std::move(coeffs), base.rhs);
            explained.insert({q.coeffs, q.rhs});
            lifts.insert({std::move(q.coeffs), q.rhs});
        }
    }
    report.candidate_count = static_cast<long>(explained.size());

    std::set<std::pair<std::vector<Int>, Int>> facet_set;
    for (const LinearInequality& q : dominant_hrep(embed.instance, budget).facets) {
        ++report.facet_count;
        facet_set.insert({q.coeffs, q.rhs});
        if (!explained.count({q.coeffs, q.rhs})) {
            report.consistent = false;
            report.unexplained.push_back(q);
        }
    }
    for (const auto& [coeffs, rhs] : lifts)
        if (!facet_set.count({coeffs, rhs})) {
            report.internal_ok = false;
            LinearInequality q;
            q.coeffs = coeffs;
            q.rhs = rhs;
            report.missing_lifts.push_back(std::move(q));
        }
    return report;
}

} // namespace mcd

#endif

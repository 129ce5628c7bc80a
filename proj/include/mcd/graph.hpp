#ifndef MCD_GRAPH_HPP
#define MCD_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcd/error.hpp"
#include "mcd/rational.hpp"

namespace mcd {

/// Simple undirected graph. Edges are canonical: endpoints ordered u < v,
/// the edge list sorted ascending, no self-loops, no parallel edges. The
/// position in `edges` is the edge index used by every weight / coefficient
/// vector in the library, so it is stable by construction.
struct Graph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    /// adj[v] = (neighbour, edge index), ascending by edge index.
    std::vector<std::vector<std::pair<int, int>>> adj;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Unordered terminal pair, canonical a < b.
struct NodePair {
    int a = 0;
    int b = 0;

    friend bool operator==(const NodePair&, const NodePair&) = default;
    friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

inline NodePair make_pair_canonical(int a, int b) {
    return a < b ? NodePair{a, b} : NodePair{b, a};
}

/// Validates and canonicalizes an edge list. Duplicate edges are an error,
/// never merged silently.
inline Graph build_graph(int node_count, std::vector<std::pair<int, int>> edge_list) {
    if (node_count < 0) fail(errc::node_out_of_range, "negative node count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count)
            fail(errc::node_out_of_range,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") leaves 0.." +
                     std::to_string(node_count - 1));
        if (u == v) fail(errc::self_loop, "self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (std::size_t i = 1; i < edge_list.size(); ++i)
        if (edge_list[i] == edge_list[i - 1])
            fail(errc::duplicate_edge, "duplicate edge (" + std::to_string(edge_list[i].first) +
                                           "," + std::to_string(edge_list[i].second) + ")");
    Graph g;
    g.node_count = node_count;
    g.edges = std::move(edge_list);
    g.adj.assign(node_count, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        g.adj[u].emplace_back(v, e);
        g.adj[v].emplace_back(u, e);
    }
    return g;
}

/// Index of edge {u, v}, or -1 when absent.
inline int edge_index(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
    if (it == g.edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - g.edges.begin());
}

/// Multicut instance: a graph plus deduplicated unordered terminal pairs.
struct MulticutInstance {
    Graph graph;
    std::vector<NodePair> pairs;
};

inline MulticutInstance build_instance(Graph graph, std::vector<NodePair> pairs) {
    for (NodePair& p : pairs) {
        if (p.a == p.b) fail(errc::same_terminals, "terminal pair {v,v} with v=" + std::to_string(p.a));
        if (p.a > p.b) std::swap(p.a, p.b);
        if (p.a < 0 || p.b >= graph.node_count)
            fail(errc::node_out_of_range, "terminal pair leaves the node range");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return MulticutInstance{std::move(graph), std::move(pairs)};
}

inline bool is_terminal(const MulticutInstance& inst, int v) {
    for (const NodePair& p : inst.pairs)
        if (p.a == v || p.b == v) return true;
    return false;
}

inline bool is_pair(const MulticutInstance& inst, int a, int b) {
    NodePair p = make_pair_canonical(a, b);
    return std::binary_search(inst.pairs.begin(), inst.pairs.end(), p);
}

/// Records how a surgery transformed indices.
///  - edge_map[e]: image edges of old edge e, in path order for path
///    replacements; empty when the edge was deleted (contraction). Several
///    old edges may share an image when parallels were merged.
///  - node_map[v]: image nodes of old node v; two entries only for the split
///    node of split_node, one entry otherwise.
struct SurgeryMap {
    std::vector<std::vector<int>> edge_map;
    std::vector<std::vector<int>> node_map;
};

/// Result of a graph surgery. `new_node` / `new_edge` identify the created
/// node and (for split_node) the fresh v1-v2 edge, -1 when not applicable.
struct Surgery {
    Graph graph;
    SurgeryMap map;
    int new_node = -1;
    int new_edge = -1;
};

namespace detail {

/// Rebuilds a canonical graph from mapped endpoint pairs. `mapped[e]` is the
/// image endpoint pair of old edge e, or nullopt when e was deleted. Parallel
/// images collapse onto one new edge (merge), self-loop images must have been
/// filtered out by the caller.
inline Surgery rebuild(int new_node_count, int old_edge_count, int old_node_count,
                       const std::vector<std::optional<std::pair<int, int>>>& mapped,
                       const std::vector<std::pair<int, int>>& extra_edges,
                       const std::vector<int>& node_image) {
    std::vector<std::pair<int, int>> all;
    for (const auto& m : mapped)
        if (m) all.push_back(*m);
    for (const auto& x : extra_edges) all.push_back(x);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    Surgery s;
    s.graph = build_graph(new_node_count, all);
    s.map.edge_map.assign(old_edge_count, {});
    for (int e = 0; e < old_edge_count; ++e)
        if (mapped[e]) s.map.edge_map[e] = {edge_index(s.graph, mapped[e]->first, mapped[e]->second)};
    s.map.node_map.assign(old_node_count, {});
    for (int v = 0; v < old_node_count; ++v) s.map.node_map[v] = {node_image[v]};
    return s;
}

} // namespace detail

/// Contracts edge e = {v, w}: w is merged into v (the smaller endpoint keeps
/// its identity), nodes above w shift down by one, the contracted edge is
/// dropped and any parallel pair created by the merge collapses onto a single
/// new edge (edge_map then sends both old edges to the same image).
inline Surgery contract_edge(const Graph& g, int e) {
    if (e < 0 || e >= g.edge_count()) fail(errc::invalid_edge, "no edge " + std::to_string(e));
    auto [v, w] = g.edges[e];
    auto image = [&](int x) { return x == w ? v : (x > w ? x - 1 : x); };

    std::vector<std::optional<std::pair<int, int>>> mapped(g.edge_count());
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        int a = image(g.edges[f].first), b = image(g.edges[f].second);
        mapped[f] = std::make_pair(std::min(a, b), std::max(a, b));
    }
    std::vector<int> node_image(g.node_count);
    for (int x = 0; x < g.node_count; ++x) node_image[x] = image(x);
    return detail::rebuild(g.node_count - 1, g.edge_count(), g.node_count, mapped, {}, node_image);
}

/// Subdivides edge e = {u, v} with one fresh node z = old node_count.
/// edge_map[e] lists the two replacement edges in path order u - z - v.
inline Surgery subdivide_edge(const Graph& g, int e) {
    if (e < 0 || e >= g.edge_count()) fail(errc::invalid_edge, "no edge " + std::to_string(e));
    auto [u, v] = g.edges[e];
    int z = g.node_count;

    std::vector<std::optional<std::pair<int, int>>> mapped(g.edge_count());
    for (int f = 0; f < g.edge_count(); ++f)
        if (f != e) mapped[f] = g.edges[f];
    std::vector<int> node_image(g.node_count);
    for (int x = 0; x < g.node_count; ++x) node_image[x] = x;

    Surgery s = detail::rebuild(g.node_count + 1, g.edge_count(), g.node_count, mapped,
                                {{u, z}, {v, z}}, node_image);
    s.new_node = z;
    s.map.edge_map[e] = {edge_index(s.graph, u, z), edge_index(s.graph, z, v)};
    return s;
}

/// Replaces edge e = {u, v} by a path of `length` edges through length - 1
/// fresh nodes (in order along the path from u). length = 1 is the identity.
inline Surgery replace_edge_by_path(const Graph& g, int e, int length) {
    if (e < 0 || e >= g.edge_count()) fail(errc::invalid_edge, "no edge " + std::to_string(e));
    if (length <= 0) fail(errc::zero_length, "path replacement needs length >= 1");
    auto [u, v] = g.edges[e];

    if (length == 1) {
        Surgery s;
        s.graph = g;
        s.map.edge_map.assign(g.edge_count(), {});
        for (int f = 0; f < g.edge_count(); ++f) s.map.edge_map[f] = {f};
        s.map.node_map.assign(g.node_count, {});
        for (int x = 0; x < g.node_count; ++x) s.map.node_map[x] = {x};
        return s;
    }

    std::vector<std::optional<std::pair<int, int>>> mapped(g.edge_count());
    for (int f = 0; f < g.edge_count(); ++f)
        if (f != e) mapped[f] = g.edges[f];
    std::vector<int> node_image(g.node_count);
    for (int x = 0; x < g.node_count; ++x) node_image[x] = x;

    std::vector<int> chain = {u};
    for (int i = 0; i < length - 1; ++i) chain.push_back(g.node_count + i);
    chain.push_back(v);
    std::vector<std::pair<int, int>> extra;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) extra.emplace_back(chain[i], chain[i + 1]);

    Surgery s = detail::rebuild(g.node_count + length - 1, g.edge_count(), g.node_count, mapped,
                                extra, node_image);
    s.new_node = g.node_count;
    std::vector<int> path;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        path.push_back(edge_index(s.graph, chain[i], chain[i + 1]));
    s.map.edge_map[e] = std::move(path);
    return s;
}

/// Splits node v into v1 = v and a fresh node v2 = old node_count joined by a
/// new edge. `side_assignment` must map every edge incident to v (and nothing
/// else) to side 1 (stays at v) or side 2 (moves to v2).
inline Surgery split_node(const Graph& g, int v, const std::map<int, int>& side_assignment) {
    if (v < 0 || v >= g.node_count) fail(errc::invalid_node, "no node " + std::to_string(v));
    for (const auto& [e, side] : side_assignment) {
        if (e < 0 || e >= g.edge_count() || (g.edges[e].first != v && g.edges[e].second != v))
            fail(errc::incomplete_assignment,
                 "side assignment mentions edge " + std::to_string(e) + " not incident to node " +
                     std::to_string(v));
        if (side != 1 && side != 2)
            fail(errc::incomplete_assignment, "side must be 1 or 2, got " + std::to_string(side));
    }
    for (const auto& [nbr, e] : g.adj[v])
        if (!side_assignment.count(e))
            fail(errc::incomplete_assignment,
                 "edge " + std::to_string(e) + " incident to node " + std::to_string(v) +
                     " has no side");

    int v2 = g.node_count;
    std::vector<std::optional<std::pair<int, int>>> mapped(g.edge_count());
    for (int f = 0; f < g.edge_count(); ++f) {
        auto [a, b] = g.edges[f];
        if (a == v || b == v) {
            if (side_assignment.at(f) == 2) {
                int other = (a == v) ? b : a;
                mapped[f] = std::make_pair(std::min(other, v2), std::max(other, v2));
                continue;
            }
        }
        mapped[f] = g.edges[f];
    }
    std::vector<int> node_image(g.node_count);
    for (int x = 0; x < g.node_count; ++x) node_image[x] = x;

    Surgery s = detail::rebuild(g.node_count + 1, g.edge_count(), g.node_count, mapped,
                                {{v, v2}}, node_image);
    s.new_node = v2;
    s.new_edge = edge_index(s.graph, v, v2);
    s.map.node_map[v] = {v, v2};
    return s;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.node_count, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < g.node_count; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack = {start}, members;
        comp[start] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (auto [nbr, e] : g.adj[u])
                if (comp[nbr] < 0) {
                    comp[nbr] = comp[start];
                    stack.push_back(nbr);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

/// Weighted shortest path with an exact deterministic tie-break.
struct PathResult {
    Rat length;
    std::vector<int> edges; // edge indices in order from s to t
};

namespace detail {

inline std::vector<std::optional<Rat>> dijkstra(const Graph& g, const std::vector<Rat>& w,
                                                int source) {
    std::vector<std::optional<Rat>> dist(g.node_count);
    std::vector<char> done(g.node_count, 0);
    dist[source] = Rat(0);
    for (;;) {
        int u = -1;
        for (int x = 0; x < g.node_count; ++x)
            if (!done[x] && dist[x] && (u < 0 || *dist[x] < *dist[u])) u = x;
        if (u < 0) break;
        done[u] = 1;
        for (auto [nbr, e] : g.adj[u]) {
            Rat nd = *dist[u] + w[e];
            if (!dist[nbr] || nd < *dist[nbr]) dist[nbr] = nd;
        }
    }
    return dist;
}

} // namespace detail

/// Minimum-weight s-t path under nonnegative rational weights. Among all
/// minimum-weight simple paths the lexicographically smallest edge index
/// sequence is returned; a permutation of equal-weight parallel routes thus
/// cannot change the answer. Zero weights are allowed, which is why the
/// tie-break is resolved by a pruned DFS over shortest-path prefixes rather
/// than inside Dijkstra (label extension is not lex-monotone at weight 0).
inline PathResult shortest_path(const Graph& g, const std::vector<Rat>& w, int s, int t) {
    if (s < 0 || s >= g.node_count || t < 0 || t >= g.node_count)
        fail(errc::node_out_of_range, "shortest_path endpoint out of range");
    if (static_cast<int>(w.size()) != g.edge_count())
        fail(errc::dimension_mismatch, "weight vector length != edge count");
    for (const Rat& q : w)
        if (q < 0) fail(errc::negative_weight, "shortest_path needs nonnegative weights");
    if (s == t) return {Rat(0), {}};

    auto to_t = detail::dijkstra(g, w, t);
    if (!to_t[s]) fail(errc::unreachable, "no path between " + std::to_string(s) + " and " +
                                              std::to_string(t));
    const Rat best = *to_t[s];

    std::vector<char> visited(g.node_count, 0);
    std::vector<int> seq;
    visited[s] = 1;
    // DFS in increasing edge index order; the first surviving complete path
    // is the lexicographic minimum among minimum-weight simple paths.
    auto dfs = [&](auto&& self, int u, const Rat& cur) -> bool {
        if (u == t) return true;
        for (auto [nbr, e] : g.adj[u]) {
            if (visited[nbr]) continue;
            Rat nd = cur + w[e];
            if (!to_t[nbr] || nd + *to_t[nbr] > best) continue;
            visited[nbr] = 1;
            seq.push_back(e);
            if (self(self, nbr, nd)) return true;
            seq.pop_back();
            visited[nbr] = 0;
        }
        return false;
    };
    dfs(dfs, s, Rat(0));
    return {best, seq};
}

/// Instance-level contraction. Refused when the endpoints are a terminal
/// pair: the pair could no longer be separated, and the dominant of the
/// contraction corresponds to the face {x_e = 0}, which is empty then.
inline std::pair<MulticutInstance, SurgeryMap> contract_edge(const MulticutInstance& inst, int e) {
    const Graph& g = inst.graph;
    if (e < 0 || e >= g.edge_count()) fail(errc::invalid_edge, "no edge " + std::to_string(e));
    auto [v, w] = g.edges[e];
    if (is_pair(inst, v, w))
        fail(errc::pair_contraction,
             "cannot contract edge {" + std::to_string(v) + "," + std::to_string(w) +
                 "}: endpoints are a terminal pair");
    Surgery s = contract_edge(g, e);
    std::vector<NodePair> pairs;
    for (const NodePair& p : inst.pairs)
        pairs.push_back(make_pair_canonical(s.map.node_map[p.a][0], s.map.node_map[p.b][0]));
    return {build_instance(std::move(s.graph), std::move(pairs)), std::move(s.map)};
}

} // namespace mcd

#endif

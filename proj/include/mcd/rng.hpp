#ifndef MCD_RNG_HPP
#define MCD_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mcd/graph.hpp"
#include "mcd/multicut.hpp"

namespace mcd {

/// Deterministic pseudo randomness for the reproducible experiment suites.
/// std::mt19937_64 has a pinned sequence; the modular draw below avoids
/// std::uniform_int_distribution, whose mapping is implementation defined,
/// so the same seed yields the same instances on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [lo, hi]. The modulo bias is negligible at test scale and
    /// harmless here, since only reproducibility matters.
    long pick(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

/// Random connected graph with node count in [min_nodes, max_nodes] and at
/// most max_edges edges: a random attachment tree plus uniformly sampled
/// extra edges.
inline Graph random_connected_graph(Rng& rng, int min_nodes, int max_nodes, int max_edges) {
    int n = static_cast<int>(rng.pick(min_nodes, std::min(max_nodes, max_edges + 1)));
    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.pick(0, v - 1));
        used.insert({u, v});
        edges.emplace_back(u, v);
    }
    long slots = static_cast<long>(n) * (n - 1) / 2 - (n - 1);
    long extra = std::min<long>(rng.pick(0, max_edges - (n - 1)), slots);
    while (extra > 0) {
        int u = static_cast<int>(rng.pick(0, n - 1));
        int v = static_cast<int>(rng.pick(0, n - 1));
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!used.insert({key.first, key.second}).second) continue;
        edges.emplace_back(key.first, key.second);
        --extra;
    }
    return build_graph(n, std::move(edges));
}

/// pair_count distinct terminal pairs over the nodes of g; the graph must
/// have enough nodes (C(n,2) >= pair_count).
inline std::vector<NodePair> random_pairs(Rng& rng, const Graph& g, int pair_count) {
    std::set<NodePair> chosen;
    while (static_cast<int>(chosen.size()) < pair_count) {
        int s = static_cast<int>(rng.pick(0, g.node_count - 1));
        int t = static_cast<int>(rng.pick(0, g.node_count - 1));
        if (s == t) continue;
        chosen.insert(make_pair_canonical(s, t));
    }
    return {chosen.begin(), chosen.end()};
}

/// Connected instance with pair_count terminal pairs; node counts start high
/// enough that the pairs always fit.
inline MulticutInstance random_instance(Rng& rng, int max_nodes, int max_edges, int pair_count) {
    int min_nodes = 2;
    while (static_cast<long>(min_nodes) * (min_nodes - 1) / 2 < pair_count) ++min_nodes;
    Graph g = random_connected_graph(rng, min_nodes, max_nodes, max_edges);
    std::vector<NodePair> pairs = random_pairs(rng, g, pair_count);
    return build_instance(std::move(g), std::move(pairs));
}

/// Integer weights drawn uniformly from [1, max_weight].
inline WeightVector random_weights(Rng& rng, int edge_count, long max_weight) {
    WeightVector w;
    w.reserve(edge_count);
    for (int e = 0; e < edge_count; ++e) w.emplace_back(rng.pick(1, max_weight));
    return w;
}

} // namespace mcd

#endif

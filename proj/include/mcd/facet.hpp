#ifndef MCD_FACET_HPP
#define MCD_FACET_HPP

#include <optional>
#include <string>
#include <vector>

#include "mcd/budget.hpp"
#include "mcd/edgeset.hpp"
#include "mcd/error.hpp"
#include "mcd/graph.hpp"
#include "mcd/inequality.hpp"
#include "mcd/linalg.hpp"
#include "mcd/multicut.hpp"
#include "mcd/rational.hpp"

namespace mcd {

struct ValidityResult {
    bool valid = false;
    /// An edge with a negative coefficient (invalid via the recession cone
    /// R^E_{>=0} of the dominant), when that is the reason.
    std::optional<int> negative_edge;
    /// A minimal multicut whose incidence vector violates the inequality.
    std::optional<EdgeSet> violating_multicut;
};

/// Validity over the whole dominant. Nonnegative coefficients make it enough
/// to check minimal multicuts: every multicut contains a minimal one and
/// adding edges can only increase the left-hand side.
inline ValidityResult is_valid(const MulticutInstance& inst, const LinearInequality& q,
                               const Budget& budget = {}) {
    if (q.dimension() != inst.graph.edge_count())
        fail(errc::dimension_mismatch, "inequality dimension != edge count");
    for (int e = 0; e < q.dimension(); ++e)
        if (q.coeffs[e] < 0) return {false, e, std::nullopt};
    for (const EdgeSet& F : enumerate_minimal_multicuts(inst, budget))
        if (evaluate(q, F) < q.rhs) return {false, std::nullopt, F};
    return {true, std::nullopt, std::nullopt};
}

/// Minimal multicuts whose incidence vectors satisfy a^T x = b.
inline std::vector<EdgeSet> tight_minimal_multicuts(const MulticutInstance& inst,
                                                    const LinearInequality& q,
                                                    const Budget& budget = {}) {
    std::vector<EdgeSet> tight;
    for (const EdgeSet& F : enumerate_minimal_multicuts(inst, budget))
        if (evaluate(q, F) == q.rhs) tight.push_back(F);
    return tight;
}

namespace detail {

inline RatVec incidence(const EdgeSet& F, int m) {
    RatVec x(m, Rat(0));
    for (int e : F.indices()) x[e] = 1;
    return x;
}

} // namespace detail

/// Dimension of the face {x in MultC : a^T x = b} for a valid inequality;
/// -1 when no vertex is tight (the face is empty: any tight point would
/// dominate a vertex, forcing that vertex tight). The face decomposes as
/// conv(tight vertices) + cone(unit rays of zero-coefficient edges), so its
/// affine hull is spanned by the tight vertices plus one ray witness per
/// zero-coefficient edge.
inline int face_dimension(const MulticutInstance& inst, const LinearInequality& q,
                          const Budget& budget = {}) {
    ValidityResult v = is_valid(inst, q, budget);
    if (!v.valid) fail(errc::not_valid, "face_dimension needs a valid inequality");
    std::vector<EdgeSet> tight = tight_minimal_multicuts(inst, q, budget);
    if (tight.empty()) return -1;
    const int m = inst.graph.edge_count();
    RatMat vectors;
    for (const EdgeSet& F : tight) vectors.push_back(detail::incidence(F, m));
    for (int e = 0; e < m; ++e) {
        if (q.coeffs[e] != 0) continue;
        RatVec w = vectors[0];
        w[e] += 1;
        vectors.push_back(std::move(w));
    }
    return affine_rank(vectors);
}

/// Facet of the dominant: valid with face dimension |E| - 1 (the dominant is
/// full-dimensional).
inline bool is_facet(const MulticutInstance& inst, const LinearInequality& q,
                     const Budget& budget = {}) {
    if (q.dimension() != inst.graph.edge_count())
        fail(errc::dimension_mismatch, "inequality dimension != edge count");
    if (!is_valid(inst, q, budget).valid) return false;
    return face_dimension(inst, q, budget) == inst.graph.edge_count() - 1;
}

/// Shared facet: also supported by |E| affinely independent incidence
/// vectors of (not necessarily minimal) multicuts. Tight multicuts are
/// exactly tight minimal multicuts plus zero-coefficient edges, so the
/// affine hull is generated by the tight vertices and, per tight vertex,
/// one-step extensions along zero-coefficient edges. A full-support facet is
/// shared without any search: its tight vertices already span the facet.
inline bool is_shared_facet(const MulticutInstance& inst, const LinearInequality& q,
                            const Budget& budget = {}) {
    if (!is_facet(inst, q, budget)) return false;
    const int m = inst.graph.edge_count();
    std::vector<EdgeSet> tight = tight_minimal_multicuts(inst, q, budget);
    std::vector<int> zero_edges;
    for (int e = 0; e < m; ++e)
        if (q.coeffs[e] == 0) zero_edges.push_back(e);
    RatMat vectors;
    for (const EdgeSet& F : tight) {
        RatVec base = detail::incidence(F, m);
        for (int e : zero_edges) {
            if (F.contains(e)) continue;
            RatVec w = base;
            w[e] = 1;
            vectors.push_back(std::move(w));
        }
        vectors.push_back(std::move(base));
    }
    return affine_rank(vectors) == m - 1;
}

/// Outcome of the structural facet sanity checks. Empty `violations` means
/// all checks passed.
struct StructuralReport {
    bool pass = true;
    std::vector<std::string> violations;

    void violate(std::string what) {
        pass = false;
        violations.push_back(std::move(what));
    }
};

/// Necessary conditions every facet other than an edge bound {x_e >= 0}
/// satisfies:
///  (a) every support edge lies on an s-t path inside the support subgraph
///      for some terminal pair;
///  (b) every leaf of the support subgraph is a terminal;
///  (c) coefficients agree along paths whose internal nodes have degree 2 in
///      the full graph and are not terminals;
///  (d) the face is bounded exactly when the support covers every edge (the
///      face's recession directions are the unit rays of zero-coefficient
///      edges).
inline StructuralReport structural_checks(const MulticutInstance& inst, const LinearInequality& q) {
    if (q.dimension() != inst.graph.edge_count())
        fail(errc::dimension_mismatch, "inequality dimension != edge count");
    const Graph& g = inst.graph;
    StructuralReport report;

    EdgeSet supp = q.support();
    // (a): enumerate simple s-t paths inside the support subgraph per pair,
    // marking the edges they cover. Desk-scale supports keep this cheap.
    EdgeSet covered;
    for (const NodePair& p : inst.pairs) {
        std::vector<char> visited(g.node_count, 0);
        std::vector<int> seq;
        visited[p.a] = 1;
        auto dfs = [&](auto&& self, int u) -> void {
            if (u == p.b) {
                for (int e : seq) covered.insert(e);
                return;
            }
            for (auto [nbr, e] : g.adj[u]) {
                if (!supp.contains(e) || visited[nbr]) continue;
                visited[nbr] = 1;
                seq.push_back(e);
                self(self, nbr);
                seq.pop_back();
                visited[nbr] = 0;
            }
        };
        dfs(dfs, p.a);
    }
    for (int e : supp.indices())
        if (!covered.contains(e))
            report.violate("support edge " + std::to_string(e) +
                           " lies on no terminal path inside the support");

    // (b): support-degree-1 nodes must be terminals.
    std::vector<int> supp_degree(g.node_count, 0);
    for (int e : supp.indices()) {
        supp_degree[g.edges[e].first]++;
        supp_degree[g.edges[e].second]++;
    }
    for (int v = 0; v < g.node_count; ++v)
        if (supp_degree[v] == 1 && !is_terminal(inst, v))
            report.violate("support leaf " + std::to_string(v) + " is not a terminal");

    // (c): around every non-terminal node of full degree 2, the two incident
    // edges form an induced terminal-free 2-path, so their coefficients must
    // agree; chaining covers longer such paths.
    for (int v = 0; v < g.node_count; ++v) {
        if (g.adj[v].size() != 2 || is_terminal(inst, v)) continue;
        int e1 = g.adj[v][0].second, e2 = g.adj[v][1].second;
        if (q.coeffs[e1] != q.coeffs[e2])
            report.violate("coefficients differ across degree-2 non-terminal node " +
                           std::to_string(v));
    }

    // (d): tautological at this level by the recession description, recorded
    // for the report's sake.
    bool bounded = supp.size() == g.edge_count();
    if (bounded != q.full_support())
        report.violate("boundedness disagrees with full support");

    return report;
}

/// Everything check-ineq reports about one inequality.
struct FacetReport {
    ValidityResult validity;
    long tight_vertex_count = 0;
    int face_dim = -1;
    bool facet = false;
    std::optional<bool> shared;
    bool bounded = false;
    StructuralReport structural;
};

inline FacetReport facet_report(const MulticutInstance& inst, const LinearInequality& q,
                                bool with_shared = false, const Budget& budget = {}) {
    FacetReport r;
    r.validity = is_valid(inst, q, budget);
    if (!r.validity.valid) return r;
    r.tight_vertex_count = static_cast<long>(tight_minimal_multicuts(inst, q, budget).size());
    r.face_dim = face_dimension(inst, q, budget);
    r.facet = r.face_dim == inst.graph.edge_count() - 1;
    r.bounded = q.full_support();
    if (with_shared) r.shared = r.facet && is_shared_facet(inst, q, budget);
    bool edge_bound = q.support().size() == 1 && q.rhs == 0;
    if (r.facet && !edge_bound) r.structural = structural_checks(inst, q);
    return r;
}

} // namespace mcd

#endif

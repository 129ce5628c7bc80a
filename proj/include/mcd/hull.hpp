#ifndef MCD_HULL_HPP
#define MCD_HULL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mcd/budget.hpp"
#include "mcd/edgeset.hpp"
#include "mcd/error.hpp"
#include "mcd/facet.hpp"
#include "mcd/graph.hpp"
#include "mcd/inequality.hpp"
#include "mcd/linalg.hpp"
#include "mcd/multicut.hpp"
#include "mcd/rational.hpp"
#include "mcd/simplex.hpp"

namespace mcd {

/// Irredundant facet description of a full-dimensional polyhedron, one
/// normalized inequality per facet in canonical order.
struct HRepresentation {
    int dimension = 0;
    std::vector<LinearInequality> facets;
};

namespace detail {

/// Dynamic bitset sized for the constraint rows seen so far.
struct TightMask {
    std::vector<std::uint64_t> words;

    void set(int i) {
        if ((int)words.size() <= i / 64) words.resize(i / 64 + 1, 0);
        words[i / 64] |= std::uint64_t(1) << (i % 64);
    }
    static TightMask common(const TightMask& a, const TightMask& b) {
        TightMask out;
        out.words.resize(std::min(a.words.size(), b.words.size()), 0);
        for (std::size_t w = 0; w < out.words.size(); ++w)
            out.words[w] = a.words[w] & b.words[w];
        return out;
    }
    bool subset_of(const TightMask& other) const {
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t o = w < other.words.size() ? other.words[w] : 0;
            if (words[w] & ~o) return false;
        }
        return true;
    }
};

struct DDRay {
    std::vector<Int> v;
    TightMask tight;
};

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool row_order(const std::vector<Int>& a, const std::vector<Int>& b) {
    int na = 0, nb = 0;
    for (const Int& x : a) na += x != 0;
    for (const Int& x : b) nb += x != 0;
    if (na != nb) return na < nb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

} // namespace detail

/// Facet enumeration by the double description method, run on the dual
/// side: homogenized generators become constraint rows of the polar cone
/// D = {(a, c) : a p + c >= 0 for points p, a r >= 0 for rays r}, whose
/// extreme rays are the facets of the input hull (plus the trivial ray
/// (0, 1), which is dropped). Rows are inserted in increasing (support,
/// lexicographic) order after a simplicial start basis; adjacency of rays
/// uses the combinatorial zero-set test, with all tight sets recomputed
/// exactly. All arithmetic is rational.
inline HRepresentation dd_convert(const RatMat& points, const RatMat& rays,
                                  const Budget& budget = {}) {
    if (points.empty()) fail(errc::empty_input, "hull needs at least one point");
    const int d = (int)points[0].size();
    if ((long long)(points.size() + rays.size()) > budget.max_hull_generators)
        fail(errc::budget_exceeded, "too many hull generators");

    std::vector<std::vector<Int>> rows;
    auto push_row = [&](const RatVec& gen, int hom) {
        if ((int)gen.size() != d) fail(errc::dimension_mismatch, "generator dimension mismatch");
        RatVec h = gen;
        h.push_back(Rat(hom));
        std::vector<Int> r = scale_to_integer(h);
        if (content(r) == 0) {
            if (hom == 0) return; // zero ray carries no constraint
            fail(errc::empty_input, "zero homogenized point"); // unreachable
        }
        rows.push_back(std::move(r));
    };
    for (const RatVec& p : points) push_row(p, 1);
    for (const RatVec& r : rays) push_row(r, 0);
    std::sort(rows.begin(), rows.end(), detail::row_order);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    // Greedy independent start basis in row order; full-dimensionality of
    // the hull is exactly the rows spanning R^{d+1}.
    RatMat echelon;
    std::vector<int> basis, rest;
    auto absorbs = [&](const std::vector<Int>& row) {
        RatVec v(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) v[i] = Rat(row[i]);
        for (const RatVec& e : echelon) {
            std::size_t lead = 0;
            while (lead < e.size() && e[lead] == 0) ++lead;
            if (lead < e.size() && v[lead] != 0) {
                Rat f = v[lead] / e[lead];
                for (std::size_t i = lead; i < v.size(); ++i) v[i] -= f * e[i];
            }
        }
        for (const Rat& x : v)
            if (x != 0) {
                echelon.push_back(v);
                std::sort(echelon.begin(), echelon.end(), [](const RatVec& a, const RatVec& b) {
                    std::size_t la = 0, lb = 0;
                    while (la < a.size() && a[la] == 0) ++la;
                    while (lb < b.size() && b[lb] == 0) ++lb;
                    return la < lb;
                });
                return true;
            }
        return false;
    };
    for (int i = 0; i < (int)rows.size() && (int)basis.size() < d + 1; ++i)
        (absorbs(rows[i]) ? basis : rest).push_back(i);
    if ((int)basis.size() < d + 1)
        fail(errc::not_full_dimensional, "generators span a proper affine subspace");
    for (int i = basis.empty() ? 0 : basis.back() + 1; i < (int)rows.size(); ++i)
        rest.push_back(i);

    // Rays of the simplicial start cone are the inverse basis columns.
    RatMat bmat(d + 1, RatVec(d + 1));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) bmat[i][j] = Rat(rows[basis[i]][j]);
    auto binv = invert(std::move(bmat));
    std::vector<detail::DDRay> current;
    for (int j = 0; j <= d; ++j) {
        RatVec col(d + 1);
        for (int i = 0; i <= d; ++i) col[i] = (*binv)[i][j];
        current.push_back({scale_to_integer(col), {}});
    }

    std::vector<int> inserted = basis;
    auto recompute_mask = [&](detail::DDRay& ray) {
        ray.tight.words.clear();
        for (int t = 0; t < (int)inserted.size(); ++t)
            if (detail::dot(rows[inserted[t]], ray.v) == 0) ray.tight.set(t);
    };
    for (detail::DDRay& ray : current) recompute_mask(ray);

    for (int idx : rest) {
        const std::vector<Int>& h = rows[idx];
        std::vector<Int> val(current.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < current.size(); ++i) {
            val[i] = detail::dot(h, current[i].v);
            any_neg = any_neg || val[i] < 0;
        }
        inserted.push_back(idx);
        if (!any_neg) {
            const int bit = (int)inserted.size() - 1;
            for (std::size_t i = 0; i < current.size(); ++i)
                if (val[i] == 0) current[i].tight.set(bit);
            continue;
        }
        std::vector<detail::DDRay> next;
        for (std::size_t i = 0; i < current.size(); ++i)
            if (val[i] >= 0) next.push_back(current[i]);
        for (std::size_t p = 0; p < current.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t n = 0; n < current.size(); ++n) {
                if (val[n] >= 0) continue;
                detail::TightMask common =
                    detail::TightMask::common(current[p].tight, current[n].tight);
                bool adjacent = true;
                for (std::size_t o = 0; o < current.size(); ++o) {
                    if (o == p || o == n) continue;
                    if (common.subset_of(current[o].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                detail::DDRay fresh;
                fresh.v.resize(d + 1);
                for (int j = 0; j <= d; ++j)
                    fresh.v[j] = val[p] * current[n].v[j] - val[n] * current[p].v[j];
                make_primitive(fresh.v);
                next.push_back(std::move(fresh));
            }
        }
        current = std::move(next);
        for (detail::DDRay& ray : current) recompute_mask(ray);
    }

    HRepresentation out;
    out.dimension = d;
    for (const detail::DDRay& ray : current) {
        bool trivial = true;
        for (int j = 0; j < d; ++j)
            if (ray.v[j] != 0) trivial = false;
        if (trivial) continue; // the ray (0, 1): x always has some value
        LinearInequality q;
        q.coeffs.assign(ray.v.begin(), ray.v.end() - 1);
        q.rhs = -ray.v[d];
        q.provenance.family = "hull";
        q.normalize();
        out.facets.push_back(std::move(q));
    }
    std::sort(out.facets.begin(), out.facets.end(), canonical_less);
    return out;
}

/// Full facet description of the multicut dominant: vertices are the
/// minimal multicut incidence vectors, recession rays the coordinate
/// directions.
inline HRepresentation dominant_hrep(const MulticutInstance& inst, const Budget& budget = {}) {
    const int m = inst.graph.edge_count();
    if (m > budget.max_hull_edges)
        fail(errc::budget_exceeded, "edge count exceeds the hull budget");
    std::vector<EdgeSet> cuts = enumerate_minimal_multicuts(inst, budget);
    RatMat points, rays;
    for (const EdgeSet& F : cuts) points.push_back(detail::incidence(F, m));
    for (int e = 0; e < m; ++e) {
        RatVec u(m, Rat(0));
        u[e] = 1;
        rays.push_back(std::move(u));
    }
    return dd_convert(points, rays, budget);
}

/// Verdict on a proposed complete description of the dominant.
struct DescriptionReport {
    bool pass = false;
    HRepresentation hrep;
    std::vector<LinearInequality> missing_facets;
    std::vector<std::size_t> invalid_candidates;   // indices into the input
    std::vector<std::size_t> redundant_candidates; // valid but not facets
};

/// Compares a candidate list against the computed facet description. The
/// candidates pass when every facet is hit (up to positive scaling) and no
/// candidate is invalid; redundant candidates do not fail the description,
/// they are only reported (a complete description may legitimately carry
/// rows that the facets imply).
inline DescriptionReport check_complete_description(const MulticutInstance& inst,
                                                    const std::vector<LinearInequality>& candidates,
                                                    const Budget& budget = {}) {
    DescriptionReport report;
    report.hrep = dominant_hrep(inst, budget);
    std::vector<LinearInequality> normalized;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        LinearInequality q = candidates[i];
        q.normalize();
        if (!is_valid(inst, q, budget).valid) {
            report.invalid_candidates.push_back(i);
        } else if (std::find(report.hrep.facets.begin(), report.hrep.facets.end(), q) ==
                   report.hrep.facets.end()) {
            report.redundant_candidates.push_back(i);
        }
        normalized.push_back(std::move(q));
    }
    for (const LinearInequality& f : report.hrep.facets)
        if (std::find(normalized.begin(), normalized.end(), f) == normalized.end())
            report.missing_facets.push_back(f);
    report.pass = report.missing_facets.empty() && report.invalid_candidates.empty();
    return report;
}

/// Box sweep over integer points: the candidate description and exact
/// membership in the dominant (a feasibility LP over the vertex hull) must
/// agree on all of {0,1,2}^E.
struct IntegerPointReport {
    bool pass = false;
    long long points_checked = 0;
    std::vector<std::vector<int>> discrepancies;
};

inline IntegerPointReport check_integer_points(const MulticutInstance& inst,
                                               const std::vector<LinearInequality>& candidates,
                                               const Budget& budget = {}) {
    const int m = inst.graph.edge_count();
    if (m > 12) fail(errc::budget_exceeded, "integer point sweep limited to 12 edges");
    std::vector<EdgeSet> cuts = enumerate_minimal_multicuts(inst, budget);

    // Membership of an integer point depends only on its support: x >= 1 on
    // the support, and any witnessing convex combination uses vertices
    // supported inside it. One LP per support pattern.
    std::map<std::uint64_t, bool> memo;
    auto member = [&](const std::vector<int>& x) {
        std::uint64_t key = 0;
        for (int e = 0; e < m; ++e)
            if (x[e] > 0) key |= std::uint64_t(1) << e;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const int k = (int)cuts.size();
        LPProblem lp(k);
        LinearInequality row;
        row.coeffs.assign(k, Int(1));
        row.rhs = 1;
        lp.add_row(row); // sum lambda >= 1
        for (Int& c : row.coeffs) c = -1;
        row.rhs = -1;
        lp.add_row(row); // sum lambda <= 1
        for (int e = 0; e < m; ++e) {
            LinearInequality cover;
            cover.coeffs.assign(k, Int(0));
            for (int i = 0; i < k; ++i)
                if (cuts[i].contains(e)) cover.coeffs[i] = -1;
            cover.rhs = -x[e];
            lp.add_row(cover); // sum over cuts through e of lambda <= x_e
        }
        bool ok = lp_solve(lp).status == LPStatus::Optimal;
        memo.emplace(key, ok);
        return ok;
    };

    IntegerPointReport report;
    std::vector<int> x(m, 0);
    for (;;) {
        ++report.points_checked;
        bool sat = true;
        for (const LinearInequality& q : candidates) {
            Int lhs(0);
            for (int e = 0; e < m; ++e) lhs += q.coeffs[e] * x[e];
            if (lhs < q.rhs) {
                sat = false;
                break;
            }
        }
        if (sat != member(x)) report.discrepancies.push_back(x);
        int pos = 0;
        while (pos < m && x[pos] == 2) x[pos++] = 0;
        if (pos == m) break;
        ++x[pos];
    }
    report.pass = report.discrepancies.empty();
    return report;
}

} // namespace mcd

#endif

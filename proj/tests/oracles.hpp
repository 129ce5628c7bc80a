/// Brute-force reference implementations for the tests. Every oracle here
/// recomputes a library result along a deliberately different route: subset
/// filtering instead of partition enumeration, hyperplane search through
/// generator subsets instead of double description, affine rank over all
/// tight multicuts instead of vertex-plus-ray witnesses. Agreement between
/// the two routes is itself what the tests assert, so nothing in this file
/// may call the function it is meant to check.
#ifndef MCD_TESTS_ORACLES_HPP
#define MCD_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mcd/inequality.hpp"
#include "mcd/multicut.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// Multicut recognition by plain reachability.

/// True when s cannot reach t once the cut edges are removed. Walks the raw
/// edge list instead of adjacency structures.
inline bool separates(const mcd::Graph& g, const mcd::EdgeSet& cut, int s, int t) {
    std::vector<char> seen(g.node_count, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e = 0; e < g.edge_count(); ++e) {
            if (cut.contains(e)) continue;
            auto [a, b] = g.edges[e];
            int w = a == v ? b : (b == v ? a : -1);
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return !seen[t];
}

inline bool is_multicut(const mcd::MulticutInstance& inst, const mcd::EdgeSet& cut) {
    for (const mcd::NodePair& p : inst.pairs)
        if (!separates(inst.graph, cut, p.a, p.b)) return false;
    return true;
}

/// All minimal multicuts by filtering the 2^m edge subsets. Minimality is
/// checked by dropping every single edge (dropping one edge suffices: cuts
/// are upward closed, so any proper subset of a multicut sits below some
/// one-edge deletion).
inline std::vector<mcd::EdgeSet> minimal_multicuts(const mcd::MulticutInstance& inst) {
    int m = inst.graph.edge_count();
    std::vector<mcd::EdgeSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m); ++bits) {
        mcd::EdgeSet cut{bits};
        if (!oracles::is_multicut(inst, cut)) continue;
        bool minimal = true;
        for (int e : cut.indices()) {
            mcd::EdgeSet sub = cut;
            sub.erase(e);
            if (oracles::is_multicut(inst, sub)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(cut);
    }
    std::sort(out.begin(), out.end(), mcd::lex_less);
    return out;
}

/// Exact minimum multicut value by scanning all subsets.
inline mcd::Rat min_multicut_value(const mcd::MulticutInstance& inst,
                                   const std::vector<mcd::Rat>& w) {
    int m = inst.graph.edge_count();
    bool found = false;
    mcd::Rat best = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m); ++bits) {
        mcd::EdgeSet cut{bits};
        if (!oracles::is_multicut(inst, cut)) continue;
        mcd::Rat value = 0;
        for (int e : cut.indices()) value += w[e];
        if (!found || value < best) {
            best = value;
            found = true;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Small exact linear algebra, self-contained.

using Row = std::vector<mcd::Rat>;
using Mat = std::vector<Row>;

/// Rank by fraction-preserving Gaussian elimination.
inline int rank(Mat rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            mcd::Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Basis of the right kernel {x : A x = 0} via reduced row echelon form.
inline Mat kernel(Mat rows, std::size_t cols) {
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        mcd::Rat lead = rows[r][c];
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            mcd::Rat f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;

    Mat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row x(cols, mcd::Rat(0));
        x[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            x[pivot_col[i]] = -rows[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Facet search through generator subsets.

namespace detail {

/// Integer normal form of a rational hyperplane a.x >= b.
inline mcd::LinearInequality to_integer(const Row& a, const mcd::Rat& b) {
    mcd::Int scale = 1;
    for (const mcd::Rat& v : a) scale = lcm(scale, mcd::Int(v.get_den()));
    scale = lcm(scale, mcd::Int(b.get_den()));
    std::vector<mcd::Int> coeffs;
    for (const mcd::Rat& v : a) {
        mcd::Rat scaled = v * mcd::Rat(scale);
        coeffs.push_back(mcd::Int(scaled.get_num()));
    }
    mcd::Rat scaled_rhs = b * mcd::Rat(scale);
    return mcd::make_inequality(std::move(coeffs), mcd::Int(scaled_rhs.get_num()));
}

inline void next_or_done(std::vector<int>& pick, int total, bool& done) {
    int k = static_cast<int>(pick.size());
    int i = k - 1;
    while (i >= 0 && pick[i] == total - k + i) --i;
    if (i < 0) {
        done = true;
        return;
    }
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
}

} // namespace detail

/// Facets of conv(points) + cone(rays) by exhausting hyperplanes spanned by
/// d-subsets of the generators (a point contributes a.v = b, a ray a.r = 0):
/// keep a subset when its system pins the hyperplane down to scaling, every
/// generator lies on the nonnegative side, and the tight generators have
/// affine rank d-1. The polyhedron must be full-dimensional with at least
/// one point.
inline std::vector<mcd::LinearInequality> facets(const Mat& points, const Mat& rays) {
    std::size_t d = points.at(0).size();
    struct Generator {
        bool is_point;
        const Row* vec;
    };
    std::vector<Generator> gens;
    for (const Row& p : points) gens.push_back({true, &p});
    for (const Row& r : rays) gens.push_back({false, &r});
    int total = static_cast<int>(gens.size());
    int k = static_cast<int>(d);
    if (k > total) return {};

    std::set<std::pair<std::vector<mcd::Int>, mcd::Int>> seen;
    std::vector<mcd::LinearInequality> out;

    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    bool done = false;
    while (!done) {
        // Unknowns (a, b); a point contributes a.v - b = 0, a ray a.r = 0.
        Mat rows;
        for (int idx : pick) {
            Row row(*gens[idx].vec);
            row.push_back(gens[idx].is_point ? mcd::Rat(-1) : mcd::Rat(0));
            rows.push_back(std::move(row));
        }
        Mat basis = kernel(std::move(rows), d + 1);
        if (basis.size() == 1) {
            Row a(basis[0].begin(), basis[0].end() - 1);
            mcd::Rat b = basis[0].back();
            bool nonzero = false;
            for (const mcd::Rat& v : a) nonzero = nonzero || v != 0;
            if (nonzero) {
                // Orient and validate: all slacks must carry one sign.
                int positives = 0, negatives = 0;
                for (const Generator& gen : gens) {
                    mcd::Rat slack = gen.is_point ? -b : mcd::Rat(0);
                    for (std::size_t j = 0; j < d; ++j) slack += a[j] * (*gen.vec)[j];
                    if (slack > 0) ++positives;
                    if (slack < 0) ++negatives;
                }
                if (positives == 0 && negatives > 0) {
                    for (mcd::Rat& v : a) v = -v;
                    b = -b;
                    std::swap(positives, negatives);
                }
                if (negatives == 0 && positives > 0) {
                    // Affine rank of the tight generators, rays as directions.
                    const Row* base = nullptr;
                    Mat diffs;
                    for (const Generator& gen : gens) {
                        mcd::Rat slack = gen.is_point ? -b : mcd::Rat(0);
                        for (std::size_t j = 0; j < d; ++j) slack += a[j] * (*gen.vec)[j];
                        if (slack != 0) continue;
                        if (!gen.is_point) {
                            diffs.push_back(*gen.vec);
                        } else if (!base) {
                            base = gen.vec;
                        } else {
                            Row diff(d);
                            for (std::size_t j = 0; j < d; ++j)
                                diff[j] = (*gen.vec)[j] - (*base)[j];
                            diffs.push_back(std::move(diff));
                        }
                    }
                    if (base && rank(std::move(diffs)) == static_cast<int>(d) - 1) {
                        mcd::LinearInequality q = detail::to_integer(a, b);
                        if (seen.insert({q.coeffs, q.rhs}).second) out.push_back(std::move(q));
                    }
                }
            }
        }
        detail::next_or_done(pick, total, done);
    }
    std::sort(out.begin(), out.end(), mcd::canonical_less);
    return out;
}

// ---------------------------------------------------------------------------
// Face dimension from all tight multicuts.

/// Dimension of the tight face from every multicut incidence vector (minimal
/// or not) plus the face's recession directions, which are the coordinate
/// rays with zero coefficient straight from the definition of the dominant;
/// -1 when no multicut is tight (the face is empty since every nonempty face
/// contains a vertex). The library computes the same quantity from minimal
/// multicuts only, leaning on the claim that supersets of tight minimal
/// multicuts are spanned by those rays; this oracle does not.
inline int face_dimension(const mcd::MulticutInstance& inst, const mcd::LinearInequality& q) {
    int m = inst.graph.edge_count();
    std::vector<mcd::EdgeSet> tight;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m); ++bits) {
        mcd::EdgeSet cut{bits};
        if (!oracles::is_multicut(inst, cut)) continue;
        if (evaluate(q, cut) == q.rhs) tight.push_back(cut);
    }
    if (tight.empty()) return -1;
    Mat diffs;
    for (std::size_t i = 1; i < tight.size(); ++i) {
        Row diff(m);
        for (int e = 0; e < m; ++e)
            diff[e] = mcd::Rat(int(tight[i].contains(e)) - int(tight[0].contains(e)));
        diffs.push_back(std::move(diff));
    }
    for (int e = 0; e < m; ++e) {
        if (q.coeffs[e] != 0) continue;
        Row ray(m, mcd::Rat(0));
        ray[e] = 1;
        diffs.push_back(std::move(ray));
    }
    return rank(std::move(diffs));
}

} // namespace oracles

#endif

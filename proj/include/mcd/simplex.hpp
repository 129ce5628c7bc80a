#ifndef MCD_SIMPLEX_HPP
#define MCD_SIMPLEX_HPP

#include <set>
#include <utility>
#include <vector>

#include "mcd/error.hpp"
#include "mcd/inequality.hpp"
#include "mcd/rational.hpp"

namespace mcd {

enum class LPStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::Unbounded: return "unbounded";
    }
    return "?";
}

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rat objective;
    std::vector<Rat> x;
    long pivots = 0;
};

/// minimize c^T x subject to a_i^T x >= b_i for every row and x >= 0.
/// Rows are kept normalized and deduplicated; cutting-plane loops feed the
/// same separating inequality repeatedly and must not grow the tableau.
struct LPProblem {
    int num_vars = 0;
    std::vector<Rat> objective;
    std::vector<LinearInequality> rows;

    explicit LPProblem(int n = 0) : num_vars(n), objective(n, Rat(0)) {}

    /// Returns false when an equivalent row (same normalized form) is
    /// already present.
    bool add_row(LinearInequality q) {
        if (q.dimension() != num_vars)
            fail(errc::dimension_mismatch, "LP row dimension != variable count");
        q.normalize();
        std::pair<std::vector<Int>, Int> key{q.coeffs, q.rhs};
        if (!seen_.insert(std::move(key)).second) return false;
        rows.push_back(std::move(q));
        return true;
    }

  private:
    std::set<std::pair<std::vector<Int>, Int>> seen_;
};

namespace detail {

/// Dense exact tableau for the two-phase primal simplex with Bland's rule.
/// Columns: structural variables, one surplus per row, one artificial per
/// row, then the right-hand side.
class SimplexTableau {
  public:
    SimplexTableau(const LPProblem& lp) : n_(lp.num_vars), k_((int)lp.rows.size()) {
        cols_ = n_ + 2 * k_ + 1;
        t_.assign(k_, std::vector<Rat>(cols_, Rat(0)));
        basis_.resize(k_);
        dead_.assign(cols_, false);
        for (int i = 0; i < k_; ++i) {
            const LinearInequality& row = lp.rows[i];
            int sign = row.rhs < 0 ? -1 : 1; // keep rhs nonnegative
            for (int j = 0; j < n_; ++j) t_[i][j] = Rat(sign * row.coeffs[j]);
            t_[i][n_ + i] = Rat(-sign);
            t_[i][n_ + k_ + i] = 1;
            t_[i][cols_ - 1] = Rat(sign * row.rhs);
            basis_[i] = n_ + k_ + i;
        }
    }

    LPSolution solve(const std::vector<Rat>& objective) {
        LPSolution out;
        // Phase 1: minimize the artificial sum. Entering candidates are the
        // structural and surplus columns only; an artificial that leaves the
        // basis is retired, which preserves the feasibility verdict.
        std::vector<Rat> phase1(cols_ - 1, Rat(0));
        for (int i = 0; i < k_; ++i) phase1[n_ + k_ + i] = 1;
        reduced_costs(phase1);
        run(out.pivots);
        if (objective_value(phase1) != 0) {
            out.status = LPStatus::Infeasible;
            return out;
        }
        evict_artificials(out.pivots);

        // Phase 2 on the surviving rows.
        std::vector<Rat> full(cols_ - 1, Rat(0));
        for (int j = 0; j < n_; ++j) full[j] = objective[j];
        for (int i = 0; i < k_; ++i) dead_[n_ + k_ + i] = true;
        reduced_costs(full);
        if (!run(out.pivots)) {
            out.status = LPStatus::Unbounded;
            return out;
        }
        out.status = LPStatus::Optimal;
        out.x.assign(n_, Rat(0));
        for (int i = 0; i < (int)basis_.size(); ++i)
            if (basis_[i] < n_) out.x[basis_[i]] = t_[i][cols_ - 1];
        out.objective = objective_value(full);
        return out;
    }

  private:
    int n_, k_, cols_;
    std::vector<std::vector<Rat>> t_;
    std::vector<int> basis_;
    std::vector<bool> dead_; // columns barred from entering
    std::vector<Rat> rc_;    // reduced costs for the current phase

    void reduced_costs(const std::vector<Rat>& cost) {
        rc_.assign(cols_ - 1, Rat(0));
        for (int j = 0; j < cols_ - 1; ++j) {
            rc_[j] = cost[j];
            for (std::size_t i = 0; i < basis_.size(); ++i)
                if (cost[basis_[i]] != 0) rc_[j] -= cost[basis_[i]] * t_[i][j];
        }
    }

    Rat objective_value(const std::vector<Rat>& cost) const {
        Rat z(0);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (cost[basis_[i]] != 0) z += cost[basis_[i]] * t_[i][cols_ - 1];
        return z;
    }

    void pivot(int r, int c, long& pivots) {
        ++pivots;
        Rat piv = t_[r][c];
        for (int j = 0; j < cols_; ++j) t_[r][j] /= piv;
        for (int i = 0; i < (int)t_.size(); ++i) {
            if (i == r || t_[i][c] == 0) continue;
            Rat f = t_[i][c];
            for (int j = 0; j < cols_; ++j) t_[i][j] -= f * t_[r][j];
        }
        Rat f = rc_[c];
        if (f != 0)
            for (int j = 0; j < cols_ - 1; ++j) rc_[j] -= f * t_[r][j];
        if (basis_[r] >= n_ + k_) dead_[basis_[r]] = true; // retire artificials
        basis_[r] = c;
    }

    /// Bland's rule: entering column is the lowest-index live column with a
    /// negative reduced cost, leaving row minimizes the ratio with ties
    /// broken by the smallest basic variable index. Returns false on
    /// unboundedness.
    bool run(long& pivots) {
        for (;;) {
            int c = -1;
            for (int j = 0; j < cols_ - 1; ++j)
                if (!dead_[j] && rc_[j] < 0) { c = j; break; }
            if (c < 0) return true;
            int r = -1;
            Rat best;
            for (int i = 0; i < (int)t_.size(); ++i) {
                if (t_[i][c] <= 0) continue;
                Rat ratio = t_[i][cols_ - 1] / t_[i][c];
                if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r < 0) return false;
            pivot(r, c, pivots);
        }
    }

    /// Degenerate artificials may sit in the basis at phase-1 optimum.
    /// Pivot them onto any live column; a row with no live nonzero entry is
    /// a redundant constraint and is removed.
    void evict_artificials(long& pivots) {
        for (int i = (int)t_.size() - 1; i >= 0; --i) {
            if (basis_[i] < n_ + k_) continue;
            int c = -1;
            for (int j = 0; j < n_ + k_; ++j)
                if (!dead_[j] && t_[i][j] != 0) { c = j; break; }
            if (c >= 0) {
                pivot(i, c, pivots);
            } else {
                t_.erase(t_.begin() + i);
                basis_.erase(basis_.begin() + i);
            }
        }
    }
};

} // namespace detail

inline LPSolution lp_solve(const LPProblem& lp) {
    if ((int)lp.objective.size() != lp.num_vars)
        fail(errc::dimension_mismatch, "objective dimension != variable count");
    if (lp.num_vars == 0) {
        // Only the trivial point exists; rows decide feasibility.
        LPSolution out;
        for (const LinearInequality& row : lp.rows)
            if (row.rhs > 0) return out;
        out.status = LPStatus::Optimal;
        out.objective = 0;
        return out;
    }
    detail::SimplexTableau tab(lp);
    return tab.solve(lp.objective);
}

} // namespace mcd

#endif

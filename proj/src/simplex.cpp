#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ctseq/polytope.hpp"

namespace ctseq {

namespace {

// Dense rational tableau for  min c.x, A x = b, x >= 0.
// Columns 0..n-1 are structural, n..n+n_art-1 artificial, last column rhs.
class Tableau {
public:
    Tableau(const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& rhs)
        : n_(columns.size()), n_art_(rhs.size()) {
        rows_.assign(n_art_, std::vector<Rational>(width()));
        for (std::size_t i = 0; i < n_art_; ++i) {
            bool flip = rhs[i].sign() < 0; // phase 1 needs nonnegative rhs
            row_sign_.push_back(flip ? -1 : 1);
            for (std::size_t j = 0; j < n_; ++j)
                rows_[i][j] = flip ? -columns[j][i] : columns[j][i];
            rows_[i][n_ + i] = Rational(1);
            rows_[i].back() = flip ? -rhs[i] : rhs[i];
        }
        basis_.resize(n_art_);
        for (std::size_t i = 0; i < n_art_; ++i) basis_[i] = n_ + i;
    }

    std::size_t width() const { return n_ + n_art_ + 1; }
    std::size_t active_rows() const { return rows_.size(); }

    // Bland's rule: entering = lowest-index column with negative reduced cost,
    // leaving = lowest basis index among the ratio-test minimizers.
    void run(const std::vector<Rational>& costs, bool artificials_may_enter) {
        const std::size_t limit = artificials_may_enter ? n_ + n_art_ : n_;
        for (;;) {
            std::size_t enter = width();
            for (std::size_t j = 0; j < limit; ++j) {
                if (is_basic(j)) continue;
                if (reduced_cost(costs, j).sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == width()) return; // optimal

            std::size_t leave = active_rows();
            Rational best_ratio;
            for (std::size_t i = 0; i < active_rows(); ++i) {
                if (rows_[i][enter].sign() <= 0) continue;
                Rational ratio = rows_[i].back() / rows_[i][enter];
                if (leave == active_rows() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == active_rows())
                throw std::logic_error("simplex: unbounded objective");
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = rows_[row];
        Rational inv = Rational(1) / pr[col];
        for (auto& v : pr) v *= inv;
        for (std::size_t i = 0; i < active_rows(); ++i) {
            if (i == row || rows_[i][col].is_zero()) continue;
            Rational f = rows_[i][col];
            for (std::size_t j = 0; j < width(); ++j)
                if (!pr[j].is_zero()) rows_[i][j] -= f * pr[j];
        }
        basis_[row] = col;
    }

    Rational reduced_cost(const std::vector<Rational>& costs, std::size_t j) const {
        Rational rc = costs[j];
        for (std::size_t i = 0; i < active_rows(); ++i) {
            const Rational& cb = costs[basis_[i]];
            if (!cb.is_zero() && !rows_[i][j].is_zero()) rc -= cb * rows_[i][j];
        }
        return rc;
    }

    Rational objective(const std::vector<Rational>& costs) const {
        Rational v;
        for (std::size_t i = 0; i < active_rows(); ++i)
            if (!costs[basis_[i]].is_zero()) v += costs[basis_[i]] * rows_[i].back();
        return v;
    }

    // Phase-1 duals in original row orientation. Valid only before any row
    // was dropped: B^-1 sits under the artificial columns.
    std::vector<Rational> phase1_duals(const std::vector<Rational>& costs) const {
        std::vector<Rational> y(n_art_);
        for (std::size_t i = 0; i < n_art_; ++i) {
            Rational yi;
            for (std::size_t r = 0; r < active_rows(); ++r) {
                const Rational& cb = costs[basis_[r]];
                if (!cb.is_zero() && !rows_[r][n_ + i].is_zero()) yi += cb * rows_[r][n_ + i];
            }
            y[i] = row_sign_[i] < 0 ? -yi : yi;
        }
        return y;
    }

    // Pivot artificial variables out of the basis; rows whose structural part
    // is all zero are linearly dependent and get dropped.
    void eliminate_artificials() {
        for (std::size_t i = 0; i < active_rows();) {
            if (basis_[i] < n_) { ++i; continue; }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (!rows_[i][j].is_zero()) { col = j; break; }
            if (col < n_) {
                pivot(i, col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    bool is_basic(std::size_t j) const {
        for (std::size_t b : basis_)
            if (b == j) return true;
        return false;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < active_rows(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i].back();
        return x;
    }

    std::vector<std::size_t> structural_basis() const {
        std::vector<std::size_t> b;
        for (std::size_t j : basis_)
            if (j < n_) b.push_back(j);
        return b;
    }

private:
    std::size_t n_;
    std::size_t n_art_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<int> row_sign_;
};

// Any y with  y . A_B = c_B  (free components zero). The system is consistent
// at an optimal basis, and every LP column lies in span(A_B), which makes the
// resulting reduced costs independent of the choice.
std::vector<Rational> dual_from_basis(const std::vector<std::vector<Rational>>& columns,
                                      const std::vector<Rational>& costs,
                                      const std::vector<std::size_t>& basis, std::size_t m) {
    std::size_t k = basis.size();
    // Row per basic column: sum_i columns[b][i] * y_i = costs[b].
    std::vector<std::vector<Rational>> eq(k, std::vector<Rational>(m + 1));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t i = 0; i < m; ++i) eq[r][i] = columns[basis[r]][i];
        eq[r][m] = costs[basis[r]];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < k; ++col) {
        std::size_t piv = rank;
        while (piv < k && eq[piv][col].is_zero()) ++piv;
        if (piv == k) continue;
        std::swap(eq[rank], eq[piv]);
        Rational inv = Rational(1) / eq[rank][col];
        for (auto& v : eq[rank]) v *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == rank || eq[r][col].is_zero()) continue;
            Rational f = eq[r][col];
            for (std::size_t c = col; c <= m; ++c) eq[r][c] -= f * eq[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<Rational> y(m);
    for (std::size_t r = 0; r < rank; ++r) y[pivot_col[r]] = eq[r][m];
    return y;
}

} // namespace

LPSolution simplex_solve_eq(const std::vector<std::vector<Rational>>& columns,
                            const std::vector<Rational>& rhs,
                            const std::vector<Rational>& costs) {
    const std::size_t m = rhs.size();
    const std::size_t n = columns.size();
    for (const auto& col : columns)
        if (col.size() != m) throw ArityError("simplex column height differs from rhs length");
    if (costs.size() != n) throw ArityError("simplex cost length differs from column count");

    Tableau tab(columns, rhs);

    // Phase 1: minimize the artificial sum.
    std::vector<Rational> phase1(n + m);
    for (std::size_t j = n; j < n + m; ++j) phase1[j] = Rational(1);
    tab.run(phase1, true);

    LPSolution out;
    if (tab.objective(phase1).sign() > 0) {
        out.status = LPSolution::Status::Infeasible;
        // Farkas certificate: y.rhs > 0 while y.column <= 0 for every column.
        out.dual = tab.phase1_duals(phase1);
        return out;
    }

    tab.eliminate_artificials();

    std::vector<Rational> phase2(n + m);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = costs[j];
    tab.run(phase2, false);

    out.status = LPSolution::Status::Optimal;
    out.witness = tab.solution();
    out.value = tab.objective(phase2);
    out.dual = dual_from_basis(columns, costs, tab.structural_basis(), m);
    out.reduced_costs.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational rc = costs[j];
        for (std::size_t i = 0; i < m; ++i)
            if (!out.dual[i].is_zero() && !columns[j][i].is_zero())
                rc -= out.dual[i] * columns[j][i];
        out.reduced_costs[j] = rc;
    }
    return out;
}

} // namespace ctseq

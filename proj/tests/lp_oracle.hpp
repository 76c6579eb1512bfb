#ifndef CTSEQ_TESTS_LP_ORACLE_HPP
#define CTSEQ_TESTS_LP_ORACLE_HPP

#include <optional>
#include <vector>

#include "ctseq/polytope.hpp"

namespace ctseq::testutil {

// Independent brute-force oracle for min sum(lambda), sum(lambda_i v_i) = target:
// enumerate subsets of at most d support points with independent columns, solve
// the linear system exactly, and keep the feasible minima. An optimal basic
// solution always has such a support, so the minimum over subsets is the LP
// optimum (and "no subset feasible" means the LP is infeasible).
class BasicSolutionOracle {
public:
    explicit BasicSolutionOracle(const SupportGeometry& geom) : geom_(geom) {}

    std::optional<Rational> min_sum(const ExponentVec& target) const {
        best_.reset();
        std::vector<std::size_t> subset;
        if (all_zero(target)) best_ = Rational(0); // empty combination
        search(0, subset, target);
        return best_;
    }

private:
    static bool all_zero(const ExponentVec& v) {
        for (auto c : v)
            if (c != 0) return false;
        return true;
    }

    void search(std::size_t next, std::vector<std::size_t>& subset,
                const ExponentVec& target) const {
        if (!subset.empty()) try_subset(subset, target);
        if (subset.size() == static_cast<std::size_t>(geom_.dimension)) return;
        for (std::size_t i = next; i < geom_.points.size(); ++i) {
            subset.push_back(i);
            search(i + 1, subset, target);
            subset.pop_back();
        }
    }

    void try_subset(const std::vector<std::size_t>& subset, const ExponentVec& target) const {
        const std::size_t d = static_cast<std::size_t>(geom_.dimension);
        const std::size_t k = subset.size();
        // Gauss-Jordan on [A_S | target].
        std::vector<std::vector<Rational>> m(d, std::vector<Rational>(k + 1));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < k; ++c)
                m[r][c] = Rational(Integer(geom_.points[subset[c]][r]));
            m[r][k] = Rational(Integer(target[r]));
        }
        std::vector<std::size_t> pivot_of_col(k, d);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < k && rank < d; ++col) {
            std::size_t piv = rank;
            while (piv < d && m[piv][col].is_zero()) ++piv;
            if (piv == d) continue;
            std::swap(m[rank], m[piv]);
            Rational inv = Rational(1) / m[rank][col];
            for (auto& v : m[rank]) v *= inv;
            for (std::size_t r = 0; r < d; ++r) {
                if (r == rank || m[r][col].is_zero()) continue;
                Rational f = m[r][col];
                for (std::size_t c = 0; c <= k; ++c) m[r][c] -= f * m[rank][c];
            }
            pivot_of_col[col] = rank;
            ++rank;
        }
        if (rank < k) return; // dependent columns: not a basic support
        for (std::size_t r = rank; r < d; ++r)
            if (!m[r][k].is_zero()) return; // inconsistent
        Rational total;
        for (std::size_t c = 0; c < k; ++c) {
            const Rational& lambda = m[pivot_of_col[c]][k];
            if (lambda.sign() < 0) return;
            total += lambda;
        }
        if (!best_ || total < *best_) best_ = total;
    }

    const SupportGeometry& geom_;
    mutable std::optional<Rational> best_;
};

} // namespace ctseq::testutil

#endif

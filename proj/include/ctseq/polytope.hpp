#ifndef CTSEQ_POLYTOPE_HPP
#define CTSEQ_POLYTOPE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ctseq/integer.hpp"
#include "ctseq/laurent.hpp"

#include <json.hpp>

namespace ctseq {

inline constexpr std::size_t kDefaultCandidateCap = 10'000'000;

/// Deduplicated support point set with its origin-containing bounding box.
struct SupportGeometry {
    int dimension = 0;
    std::vector<ExponentVec> points; // distinct, ascending lex
    ExponentVec box_lo;              // min(0, min_i v_i_c) per coordinate
    ExponentVec box_hi;              // max(0, max_i v_i_c) per coordinate

    static SupportGeometry from_points(int dimension, std::vector<ExponentVec> pts);

    template <class R>
    static SupportGeometry of(const Polynomial<R>& p) {
        return from_points(p.dimension(), p.support());
    }

    bool empty() const { return points.empty(); }
};

/// Exact optimum of  min sum(lambda)  s.t.  sum(lambda_i * v_i) = target, lambda >= 0.
struct LPSolution {
    enum class Status { Optimal, Infeasible };

    Status status = Status::Infeasible;
    Rational value;                      // objective at optimum
    std::vector<Rational> witness;       // lambda, indexed like geometry points
    std::vector<Rational> dual;          // optimal: dual prices; infeasible: Farkas vector
    std::vector<Rational> reduced_costs; // 1 - dual . v_j  (optimal only)

    bool optimal() const { return status == Status::Optimal; }
};

/// General-purpose exact two-phase simplex (Bland's rule):
/// min costs.x  s.t.  sum_j x_j * columns[j] = rhs,  x >= 0.
LPSolution simplex_solve_eq(const std::vector<std::vector<Rational>>& columns,
                            const std::vector<Rational>& rhs,
                            const std::vector<Rational>& costs);

LPSolution lp_min_sum(const SupportGeometry& geom, const ExponentVec& target);

/// Minimal lambda-sum reaching v, or nullopt when v is outside the cone reach.
std::optional<Rational> g_value(const SupportGeometry& geom, const ExponentVec& target);

/// Whether the convex hull of the points contains the origin.
bool contains_origin(const SupportGeometry& geom);

/// All integer points of the bounding box except the origin (ascending lex).
std::vector<ExponentVec> integral_candidates(const SupportGeometry& geom,
                                             std::size_t cap = kDefaultCandidateCap);

/// Nonzero integral points v with finite g(v) < 1/M, with their g-values.
std::vector<std::pair<ExponentVec, Rational>> interior_points_at_scale(
    const SupportGeometry& geom, std::uint64_t M, std::size_t cap = kDefaultCandidateCap);

struct PolytopeReport {
    std::uint64_t m_min = 1;
    std::optional<Rational> g_min; // min finite g over nonzero candidates
    std::vector<std::pair<ExponentVec, Rational>> interior_points; // at scale 1
    bool origin_inside = false;
};

/// Smallest digit bound M such that the 1/M-scaled polytope has no nonzero
/// integral point with lambda-sum below 1/M, plus the scale-1 interior points.
PolytopeReport minimal_M(const SupportGeometry& geom,
                         std::size_t cap = kDefaultCandidateCap);

nlohmann::json to_json(const PolytopeReport& report);

} // namespace ctseq

#endif

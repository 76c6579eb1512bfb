#include "ctseq/polytope.hpp"

#include <algorithm>
#include <set>

namespace ctseq {

SupportGeometry SupportGeometry::from_points(int dimension, std::vector<ExponentVec> pts) {
    if (dimension < 1) throw ArityError("geometry dimension must be at least 1");
    SupportGeometry g;
    g.dimension = dimension;
    std::set<ExponentVec> dedup;
    for (auto& p : pts) {
        if (static_cast<int>(p.size()) != dimension)
            throw ArityError("support point length differs from dimension");
        dedup.insert(std::move(p));
    }
    g.points.assign(dedup.begin(), dedup.end());
    g.box_lo.assign(dimension, 0);
    g.box_hi.assign(dimension, 0);
    for (const auto& p : g.points)
        for (int c = 0; c < dimension; ++c) {
            g.box_lo[c] = std::min(g.box_lo[c], p[c]);
            g.box_hi[c] = std::max(g.box_hi[c], p[c]);
        }
    return g;
}

LPSolution lp_min_sum(const SupportGeometry& geom, const ExponentVec& target) {
    if (static_cast<int>(target.size()) != geom.dimension)
        throw ArityError("target length differs from geometry dimension");
    std::vector<std::vector<Rational>> columns;
    columns.reserve(geom.points.size());
    for (const auto& p : geom.points) {
        std::vector<Rational> col(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) col[i] = Rational(Integer(p[i]));
        columns.push_back(std::move(col));
    }
    std::vector<Rational> rhs(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) rhs[i] = Rational(Integer(target[i]));
    std::vector<Rational> costs(columns.size(), Rational(1));
    return simplex_solve_eq(columns, rhs, costs);
}

std::optional<Rational> g_value(const SupportGeometry& geom, const ExponentVec& target) {
    LPSolution sol = lp_min_sum(geom, target);
    if (!sol.optimal()) return std::nullopt;
    return sol.value;
}

bool contains_origin(const SupportGeometry& geom) {
    if (geom.empty()) throw EmptySupportError("contains_origin of an empty support");
    // Feasibility of: sum(lambda_i * v_i) = 0, sum(lambda_i) = 1, lambda >= 0.
    const int d = geom.dimension;
    std::vector<std::vector<Rational>> columns;
    for (const auto& p : geom.points) {
        std::vector<Rational> col(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i < d; ++i) col[static_cast<std::size_t>(i)] = Rational(Integer(p[i]));
        col.back() = Rational(1);
        columns.push_back(std::move(col));
    }
    std::vector<Rational> rhs(static_cast<std::size_t>(d) + 1);
    rhs.back() = Rational(1);
    std::vector<Rational> costs(columns.size());
    return simplex_solve_eq(columns, rhs, costs).optimal();
}

std::vector<ExponentVec> integral_candidates(const SupportGeometry& geom, std::size_t cap) {
    std::vector<ExponentVec> out;
    if (geom.empty()) return out;
    const int d = geom.dimension;
    unsigned __int128 count = 1;
    for (int c = 0; c < d; ++c) {
        count *= static_cast<unsigned __int128>(geom.box_hi[c] - geom.box_lo[c] + 1);
        if (count > cap) {
            std::size_t req = count > static_cast<unsigned __int128>(SIZE_MAX)
                                  ? SIZE_MAX
                                  : static_cast<std::size_t>(count);
            throw CandidateExplosionError("bounding box exceeds the lattice-point cap", req, cap);
        }
    }
    out.reserve(static_cast<std::size_t>(count));
    ExponentVec v = geom.box_lo;
    for (;;) {
        bool is_origin = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
        if (!is_origin) out.push_back(v);
        int c = d - 1;
        while (c >= 0 && v[c] == geom.box_hi[c]) {
            v[c] = geom.box_lo[c];
            --c;
        }
        if (c < 0) break;
        ++v[c];
    }
    return out;
}

std::vector<std::pair<ExponentVec, Rational>> interior_points_at_scale(
    const SupportGeometry& geom, std::uint64_t M, std::size_t cap) {
    if (M < 1) throw InvalidParametersError("scale M must be at least 1");
    const Rational threshold(Integer(1), Integer(static_cast<long>(M)));
    std::vector<std::pair<ExponentVec, Rational>> out;
    for (const auto& v : integral_candidates(geom, cap)) {
        auto g = g_value(geom, v);
        if (g && *g < threshold) out.emplace_back(v, *g);
    }
    return out; // candidates come in ascending lex order already
}

PolytopeReport minimal_M(const SupportGeometry& geom, std::size_t cap) {
    if (geom.empty()) throw EmptySupportError("minimal_M of an empty support");
    PolytopeReport report;
    const Rational one(1);
    for (const auto& v : integral_candidates(geom, cap)) {
        auto g = g_value(geom, v);
        if (!g) continue;
        if (!report.g_min || *g < *report.g_min) report.g_min = *g;
        if (*g < one) report.interior_points.emplace_back(v, *g);
    }
    if (!report.g_min) {
        report.m_min = 1;
    } else {
        Integer m = (Rational(1) / *report.g_min).ceil();
        report.m_min = m <= Integer(1) ? 1 : static_cast<std::uint64_t>(m.to_int64());
    }
    report.origin_inside = contains_origin(geom);
    return report;
}

nlohmann::json to_json(const PolytopeReport& report) {
    nlohmann::json j;
    j["m_min"] = report.m_min;
    j["g_min"] = report.g_min ? nlohmann::json(report.g_min->str()) : nlohmann::json(nullptr);
    auto points = nlohmann::json::array();
    for (const auto& [v, g] : report.interior_points) {
        nlohmann::json entry;
        entry["v"] = v;
        entry["g"] = g.str();
        points.push_back(entry);
    }
    j["interior_points"] = points;
    j["contains_origin"] = report.origin_inside;
    return j;
}

} // namespace ctseq

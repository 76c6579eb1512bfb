#include <doctest.h>

#include <set>

#include "ctseq/parser.hpp"
#include "ctseq/polytope.hpp"

#include "lp_oracle.hpp"
#include "test_util.hpp"

using namespace ctseq;

namespace {

SupportGeometry geom_of(const std::string& poly, const std::string& vars) {
    ParseContext ctx = ParseContext::from_comma_list(vars);
    return SupportGeometry::of(parse(poly, ctx));
}

const char* kApery = "(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)";
const char* kRect = "(1+x)*(1+y)*(1+(1+x)*(1+y)^2/(x*y))";
const char* kTri = "(1+x+y)*(1+(1+x+y)^2/(x*y))";
const char* kEta = "(z*x+x*y-y*z-x-1)*(x*y+y*z-z*x-y-1)*(y*z+z*x-x*y-z-1)/(x*y*z)";

SupportGeometry u_support() {
    return SupportGeometry::from_points(1, {{-1}, {0}, {1}, {2}});
}

// Exact re-substitution of witness and certificate, for every solved LP.
void require_valid_certificate(const SupportGeometry& geom, const ExponentVec& target,
                               const LPSolution& sol) {
    const std::size_t d = static_cast<std::size_t>(geom.dimension);
    if (sol.optimal()) {
        REQUIRE(sol.witness.size() == geom.points.size());
        Rational total;
        std::vector<Rational> reached(d);
        for (std::size_t j = 0; j < geom.points.size(); ++j) {
            REQUIRE(sol.witness[j].sign() >= 0);
            total += sol.witness[j];
            for (std::size_t i = 0; i < d; ++i)
                reached[i] += sol.witness[j] * Rational(Integer(geom.points[j][i]));
        }
        for (std::size_t i = 0; i < d; ++i)
            REQUIRE(reached[i] == Rational(Integer(target[i])));
        REQUIRE(total == sol.value);
        // dual feasibility + strong duality
        REQUIRE(sol.reduced_costs.size() == geom.points.size());
        Rational dual_value;
        for (std::size_t i = 0; i < d; ++i)
            dual_value += sol.dual[i] * Rational(Integer(target[i]));
        REQUIRE(dual_value == sol.value);
        for (std::size_t j = 0; j < geom.points.size(); ++j) {
            Rational rc(1);
            for (std::size_t i = 0; i < d; ++i)
                rc -= sol.dual[i] * Rational(Integer(geom.points[j][i]));
            REQUIRE(rc == sol.reduced_costs[j]);
            REQUIRE(rc.sign() >= 0);
        }
    } else {
        // Farkas: y separates target from the cone of the support points.
        Rational yb;
        for (std::size_t i = 0; i < d; ++i)
            yb += sol.dual[i] * Rational(Integer(target[i]));
        REQUIRE(yb.sign() > 0);
        for (const auto& p : geom.points) {
            Rational yv;
            for (std::size_t i = 0; i < d; ++i)
                yv += sol.dual[i] * Rational(Integer(p[i]));
            REQUIRE(yv.sign() <= 0);
        }
    }
}

LPSolution solve_checked(const SupportGeometry& geom, const ExponentVec& target) {
    LPSolution sol = lp_min_sum(geom, target);
    require_valid_certificate(geom, target, sol);
    return sol;
}

} // namespace

TEST_CASE("geometry deduplicates points and boxes in the origin") {
    auto g = SupportGeometry::from_points(2, {{1, 2}, {1, 2}, {3, -1}});
    CHECK(g.points.size() == 2);
    CHECK(g.box_lo == ExponentVec{0, -1});
    CHECK(g.box_hi == ExponentVec{3, 2});
    CHECK_THROWS_AS(SupportGeometry::from_points(2, {{1}}), ArityError);
}

TEST_CASE("lp_min_sum on the interval support") {
    auto g = u_support();
    auto sol = solve_checked(g, {1});
    REQUIRE(sol.optimal());
    CHECK(sol.value == Rational(Integer(1), Integer(2)));
    CHECK(sol.witness[3] == Rational(Integer(1), Integer(2))); // points ascend: -1,0,1,2

    auto zero = solve_checked(g, {0});
    REQUIRE(zero.optimal());
    CHECK(zero.value == Rational(0));
    for (const auto& l : zero.witness) CHECK(l.is_zero());
}

TEST_CASE("lp_min_sum on the rectangle support") {
    auto g = geom_of(kRect, "x,y");
    CHECK(g.points.size() == 12);
    auto sol = solve_checked(g, {0, 1});
    REQUIRE(sol.optimal());
    CHECK(sol.value == Rational(Integer(1), Integer(2)));
}

TEST_CASE("g_value on the interval support") {
    auto g = u_support();
    CHECK(*g_value(g, {-1}) == Rational(1));
    CHECK(*g_value(g, {2}) == Rational(1));
    CHECK(*g_value(g, {5}) == Rational(Integer(5), Integer(2)));
    CHECK(*g_value(g, {0}) == Rational(0));
}

TEST_CASE("infeasible targets produce a Farkas certificate") {
    auto g = SupportGeometry::from_points(2, {{1, 0}, {2, 0}});
    auto sol = solve_checked(g, {0, 1});
    CHECK(!sol.optimal());
    CHECK(!g_value(g, {0, 1}).has_value());
}

TEST_CASE("contains_origin") {
    CHECK(contains_origin(u_support()));
    CHECK(!contains_origin(SupportGeometry::from_points(1, {{1}, {2}})));
    CHECK(contains_origin(SupportGeometry::from_points(2, {{1, 0}, {-1, 0}})));
    CHECK_THROWS_AS(contains_origin(SupportGeometry::from_points(1, {})), EmptySupportError);
}

TEST_CASE("integral candidate enumeration") {
    auto u = integral_candidates(u_support());
    CHECK(u == std::vector<ExponentVec>{{-1}, {1}, {2}});
    CHECK(integral_candidates(geom_of(kRect, "x,y")).size() == 11); // 3*4 - 1
    CHECK(integral_candidates(SupportGeometry::from_points(1, {})).empty());
    CHECK_THROWS_AS(integral_candidates(SupportGeometry::from_points(1, {{-5}, {6}}), 10),
                    CandidateExplosionError);
}

TEST_CASE("interior points at scale") {
    auto rect = interior_points_at_scale(geom_of(kRect, "x,y"), 1);
    REQUIRE(rect.size() == 1);
    CHECK(rect[0].first == ExponentVec{0, 1});
    CHECK(rect[0].second == Rational(Integer(1), Integer(2)));

    CHECK(interior_points_at_scale(geom_of(kApery, "x,y,z"), 1).empty());

    std::set<ExponentVec> eta;
    for (const auto& [v, g] : interior_points_at_scale(geom_of(kEta, "x,y,z"), 1))
        eta.insert(v);
    for (ExponentVec v : {ExponentVec{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})
        CHECK(eta.count(v) == 1);
    for (ExponentVec v : {ExponentVec{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})
        CHECK(eta.count(v) == 1);
}

TEST_CASE("minimal digit bound matches the known polytopes") {
    auto u = minimal_M(u_support());
    CHECK(u.m_min == 2);
    CHECK(*u.g_min == Rational(Integer(1), Integer(2)));
    CHECK(u.origin_inside);
    REQUIRE(u.interior_points.size() == 1);
    CHECK(u.interior_points[0].first == ExponentVec{1});

    CHECK(minimal_M(geom_of(kApery, "x,y,z")).m_min == 1);
    CHECK(minimal_M(geom_of(kRect, "x,y")).m_min == 2);
    CHECK(minimal_M(geom_of(kTri, "x,y")).m_min == 1);
    CHECK(minimal_M(geom_of(kEta, "x,y,z")).m_min == 2);
    CHECK_THROWS_AS(minimal_M(SupportGeometry::from_points(1, {})), EmptySupportError);
}

TEST_CASE("report serialization is stable") {
    auto rep = minimal_M(u_support());
    auto j = to_json(rep);
    CHECK(j["m_min"] == 2);
    CHECK(j["g_min"] == "1/2");
    CHECK(j["contains_origin"] == true);
    REQUIRE(j["interior_points"].size() == 1);
    CHECK(j["interior_points"][0]["v"] == nlohmann::json::array({1}));
    CHECK(j["interior_points"][0]["g"] == "1/2");
    CHECK(to_json(minimal_M(u_support())).dump() == j.dump());
}

TEST_CASE("simplex agrees with the basic-solution oracle") {
    testutil::Rng rng(60423);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = static_cast<int>(testutil::uniform(rng, 1, 3));
        auto geom = SupportGeometry::from_points(dim, testutil::random_support(rng, dim));
        testutil::BasicSolutionOracle oracle(geom);
        for (int t = 0; t < 6; ++t) {
            ExponentVec target(static_cast<std::size_t>(dim));
            for (auto& c : target) c = testutil::uniform(rng, -4, 4);
            auto sol = solve_checked(geom, target);
            auto expected = oracle.min_sum(target);
            if (expected) {
                REQUIRE(sol.optimal());
                CHECK(sol.value == *expected);
            } else {
                CHECK(!sol.optimal());
            }
        }
    }
}

TEST_CASE("g is positive away from the origin and vanishes at it") {
    testutil::Rng rng(5081);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = static_cast<int>(testutil::uniform(rng, 1, 3));
        auto geom = SupportGeometry::from_points(dim, testutil::random_support(rng, dim));
        CHECK(*g_value(geom, ExponentVec(static_cast<std::size_t>(dim), 0)) == Rational(0));
        for (const auto& v : integral_candidates(geom)) {
            auto g = g_value(geom, v);
            if (g) CHECK(g->sign() > 0);
        }
    }
}

TEST_CASE("g is subadditive under integer scaling") {
    testutil::Rng rng(11311);
    for (int trial = 0; trial < 25; ++trial) {
        int dim = static_cast<int>(testutil::uniform(rng, 1, 2));
        auto geom = SupportGeometry::from_points(dim, testutil::random_support(rng, dim));
        for (const auto& v : integral_candidates(geom)) {
            auto g1 = g_value(geom, v);
            if (!g1) continue;
            for (std::int64_t t : {2, 3}) {
                ExponentVec tv(v);
                for (auto& c : tv) c *= t;
                auto gt = g_value(geom, tv);
                REQUIRE(gt.has_value());
                CHECK(*gt <= Rational(Integer(t)) * *g1);
            }
        }
    }
}

TEST_CASE("minimal_M satisfies its defining predicate") {
    testutil::Rng rng(902100);
    int checked = 0;
    while (checked < 40) {
        int dim = static_cast<int>(testutil::uniform(rng, 1, 3));
        auto geom = SupportGeometry::from_points(dim, testutil::random_support(rng, dim));
        if (geom.empty()) continue;
        ++checked;
        auto report = minimal_M(geom);
        CHECK(interior_points_at_scale(geom, report.m_min).empty());
        if (report.m_min > 1)
            CHECK(!interior_points_at_scale(geom, report.m_min - 1).empty());
        // monotone: once empty, stays empty at larger M
        CHECK(interior_points_at_scale(geom, report.m_min + 1).empty());
        CHECK(interior_points_at_scale(geom, 2 * report.m_min).empty());
    }
}

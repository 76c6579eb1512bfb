#include <doctest.h>

#include <set>

#include "ctseq/laurent.hpp"
#include "ctseq/parser.hpp"

#include "test_util.hpp"

using namespace ctseq;

namespace {
const ParseContext X({"x"});
const ParseContext XY({"x", "y"});
const ParseContext XYZ({"x", "y", "z"});
} // namespace

TEST_CASE("addition drops cancelled terms") {
    CHECK((parse("x", X) + parse("-x", X)).is_zero());
    CHECK(parse("1+x", X) + parse("1-x", X) == parse("2", X));
    CHECK(parse("x^2", X) + parse("x+1", X) == parse("x^2+x+1", X));
}

TEST_CASE("multiplication") {
    CHECK(parse("1+x", X) * parse("x-1/x", X) == parse("x^2+x-1-x^-1", X));
    IntPolynomial p = parse("3*x^2*y - y^-2 + 7", XY);
    CHECK(p * IntPolynomial::one(2, IntegerRing{}) == p);
    // hand expansion: 1 - 1/x + x - 1 = x - 1/x
    CHECK(parse("1+x", X) * parse("1-1/x", X) == parse("x-x^-1", X));
}

TEST_CASE("powers") {
    CHECK(parse("x^2-y+5", XY).pow(0) == IntPolynomial::one(2, IntegerRing{}));
    CHECK(parse("1+x", X).pow(2) == parse("1+2*x+x^2", X));
    CHECK(parse("x-1/x", X).pow(2) == parse("x^2-2+x^-2", X));
}

TEST_CASE("constant term and coefficient access") {
    IntPolynomial p = parse("x^2+x-1-x^-1", X);
    CHECK(p.constant_term() == Integer(-1));
    CHECK(IntPolynomial::one(1, IntegerRing{}).constant_term() == Integer(1));
    CHECK(parse("x+y", XY).constant_term() == Integer(0));

    CHECK(p.coeff({-1}) == Integer(-1));
    CHECK(p.coeff({3}) == Integer(0));
    CHECK(parse("(1+x)^4", X).coeff({2}) == binomial(4, 2));
    CHECK_THROWS_AS(p.coeff({1, 2}), ArityError);
}

TEST_CASE("cartier operator") {
    CHECK(parse("x^3+2*x+5", X).cartier(3) == parse("x+5", X));
    // no exponent divisible by p except 0: collapses to the constant term
    IntPolynomial p = parse("x^2+x-1-x^-1", X);
    CHECK(p.cartier(5) == parse("-1", X));
    CHECK(parse("x^2*y^2+x*y", XY).cartier(2) == parse("x*y", XY));
}

TEST_CASE("frobenius substitution") {
    CHECK(parse("1+x", X).frobenius_substitute(5) == parse("1+x^5", X));
    CHECK(parse("x-1/x", X).frobenius_substitute(3) == parse("x^3-x^-3", X));
    CHECK(parse("7", X).frobenius_substitute(11) == parse("7", X));
}

TEST_CASE("reduce_mod") {
    CHECK(reduce_mod(parse("5*x+3", X), 5) == reduce_mod(parse("3", X), 5));
    CHECK(reduce_mod(parse("x^2+x-1-x^-1", X), 2) == reduce_mod(parse("x^2+x+1+x^-1", X), 2));
    CHECK(reduce_mod(parse("(1+x)^3", X), 3) == reduce_mod(parse("1+x^3", X), 3));
    CHECK_THROWS_AS(reduce_mod(parse("x", X), 1), InvalidModulusError);
}

TEST_CASE("degree_sup") {
    CHECK(parse("x^2+x-1-x^-1", X).degree_sup() == 2);
    CHECK(parse("(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)", XYZ).degree_sup() == 2);
    CHECK(parse("1", X).degree_sup() == 0);
    CHECK_THROWS_AS(IntPolynomial::zero(1, IntegerRing{}).degree_sup(), DegreeOfZeroError);
}

TEST_CASE("dimension and ring mismatches are rejected") {
    CHECK_THROWS_AS((void)(parse("x", X) + parse("x+y", XY)), ArityError);
    CHECK_THROWS_AS((void)(parse("x", X) * parse("x+y", XY)), ArityError);
    ModPolynomial a = reduce_mod(parse("1+x", X), 5);
    ModPolynomial b = reduce_mod(parse("1+x", X), 7);
    CHECK_THROWS_AS((void)(a * b), ArityError);
}

TEST_CASE("ring laws on random polynomials") {
    testutil::Rng rng(424242);
    for (int i = 0; i < 60; ++i) {
        int dim = static_cast<int>(testutil::uniform(rng, 1, 3));
        IntPolynomial a = testutil::random_poly(rng, dim);
        IntPolynomial b = testutil::random_poly(rng, dim);
        IntPolynomial c = testutil::random_poly(rng, dim);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("pow is additive in the exponent") {
    testutil::Rng rng(910);
    for (int i = 0; i < 20; ++i) {
        int dim = static_cast<int>(testutil::uniform(rng, 1, 2));
        IntPolynomial p = testutil::random_poly(rng, dim, 4, 2);
        auto ea = static_cast<std::uint64_t>(testutil::uniform(rng, 0, 6));
        auto eb = static_cast<std::uint64_t>(testutil::uniform(rng, 0, 6));
        CHECK(p.pow(ea + eb) == p.pow(ea) * p.pow(eb));
    }
}

TEST_CASE("frobenius congruence: P^p = P(x^p) over Z/p") {
    testutil::Rng rng(5150);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (int i = 0; i < 25; ++i) {
            int dim = static_cast<int>(testutil::uniform(rng, 1, 3));
            ModPolynomial q = reduce_mod(testutil::random_poly(rng, dim), p);
            CHECK(q.pow(p) == q.frobenius_substitute(p));
        }
    }
}

TEST_CASE("cartier adjunction: Cartier(F(x^p) G) = F Cartier(G)") {
    testutil::Rng rng(31337);
    for (std::uint64_t p : {2, 3, 5}) {
        for (int i = 0; i < 25; ++i) {
            int dim = static_cast<int>(testutil::uniform(rng, 1, 3));
            IntPolynomial f = testutil::random_poly(rng, dim);
            IntPolynomial g = testutil::random_poly(rng, dim);
            CHECK((f.frobenius_substitute(p) * g).cartier(p) == f * g.cartier(p));
            // same identity over a modular ring
            ModPolynomial fm = reduce_mod(f, 13);
            ModPolynomial gm = reduce_mod(g, 13);
            CHECK((fm.frobenius_substitute(p) * gm).cartier(p) == fm * gm.cartier(p));
        }
    }
}

TEST_CASE("cartier preserves the constant term") {
    testutil::Rng rng(2718);
    for (int i = 0; i < 50; ++i) {
        int dim = static_cast<int>(testutil::uniform(rng, 1, 3));
        IntPolynomial f = testutil::random_poly(rng, dim);
        for (std::uint64_t p : {2, 3, 5, 7})
            CHECK(f.cartier(p).constant_term() == f.constant_term());
    }
}

TEST_CASE("support of a product sits inside the Minkowski sum") {
    testutil::Rng rng(161803);
    for (int i = 0; i < 40; ++i) {
        int dim = static_cast<int>(testutil::uniform(rng, 1, 3));
        IntPolynomial a = testutil::random_poly(rng, dim);
        IntPolynomial b = testutil::random_poly(rng, dim);
        std::set<ExponentVec> minkowski;
        for (const auto& ea : a.support())
            for (const auto& eb : b.support()) {
                ExponentVec s(ea);
                for (int c = 0; c < dim; ++c) s[static_cast<std::size_t>(c)] += eb[static_cast<std::size_t>(c)];
                minkowski.insert(s);
            }
        for (const auto& e : (a * b).support()) CHECK(minkowski.count(e) == 1);
    }
}

TEST_CASE("zero polynomial conventions") {
    IntPolynomial zero = IntPolynomial::zero(2, IntegerRing{});
    CHECK(zero.is_zero());
    CHECK(zero.constant_term() == Integer(0));
    CHECK(zero.term_count() == 0);
    CHECK((zero * parse("x+y", XY)).is_zero());
}

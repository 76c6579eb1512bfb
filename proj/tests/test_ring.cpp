#include <doctest.h>

#include <string>
#include <vector>

#include "ctseq/integer.hpp"
#include "ctseq/modular.hpp"

#include "test_util.hpp"

using namespace ctseq;

namespace {

// Schoolbook long division on the decimal string, as an independent check.
std::uint64_t long_division_mod(const std::string& decimal, std::uint64_t m) {
    std::uint64_t r = 0;
    for (char c : decimal) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % m;
    return r;
}

// Pascal-triangle oracle for small binomials.
Integer pascal(int n, int k) {
    std::vector<std::vector<Integer>> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Integer(1));
        for (int j = 1; j < i; ++j)
            row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                row[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    if (k < 0 || k > n) return Integer(0);
    return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace

TEST_CASE("mod_reduce canonicalizes into [0, m)") {
    CHECK(mod_reduce(Integer(-1), 5).residue() == 4);
    CHECK(mod_reduce(Integer(0), 7).residue() == 0);
    CHECK(long_division_mod("54091", 7) == 2);
    CHECK(mod_reduce(Integer(54091), 7).residue() == 2);
    CHECK_THROWS_AS(mod_reduce(Integer(3), 1), InvalidModulusError);
    CHECK_THROWS_AS(mod_reduce(Integer(3), 0), InvalidModulusError);
    CHECK_THROWS_AS(mod_reduce(Integer(3), (std::uint64_t{1} << 63)), InvalidModulusError);
    CHECK(mod_reduce(Integer(-3), kMaxModulus).residue() == kMaxModulus - 3);
}

TEST_CASE("mod_reduce is a ring homomorphism") {
    testutil::Rng rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Integer x(testutil::uniform(rng, -1000000, 1000000));
        Integer y(testutil::uniform(rng, -1000000, 1000000));
        x = x * x * x; // push beyond small residues
        std::uint64_t m = static_cast<std::uint64_t>(testutil::uniform(rng, 2, 1 << 20));
        CHECK(mod_reduce(x * y, m) == mod_reduce(x, m) * mod_reduce(y, m));
        CHECK(mod_reduce(x + y, m) == mod_reduce(x, m) + mod_reduce(y, m));
        CHECK(mod_reduce(x - y, m) == mod_reduce(x, m) - mod_reduce(y, m));
    }
}

TEST_CASE("modular arithmetic rejects mixed moduli") {
    Mod a(3, 7), b(3, 11);
    CHECK_THROWS_AS((void)(a + b), ModulusMismatchError);
    CHECK_THROWS_AS((void)(a * b), ModulusMismatchError);
    CHECK_THROWS_AS((void)(a == b), ModulusMismatchError);
}

TEST_CASE("overflow-safe modular multiplication near 2^63") {
    std::uint64_t m = kMaxModulus;
    std::uint64_t a = m - 1;
    // (m-1)^2 = m^2 - 2m + 1 = 1 mod m
    CHECK(mul_mod(a, a, m) == 1);
    CHECK(add_mod(a, a, m) == m - 2);
}

TEST_CASE("rational comparison is exact and total") {
    CHECK(rat_cmp(Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(3))) == 1);
    CHECK(rat_cmp(Rational(Integer(2), Integer(4)), Rational(Integer(1), Integer(2))) == 0);
    CHECK(rat_cmp(Rational(Integer(0), Integer(1)), Rational(Integer(1), Integer(1000000))) == -1);
}

TEST_CASE("rationals stay canonical") {
    Rational q(Integer(6), Integer(-4));
    CHECK(q.numerator() == Integer(-3));
    CHECK(q.denominator() == Integer(2));
    CHECK(q.str() == "-3/2");
    CHECK(Rational(Integer(0), Integer(-5)).str() == "0");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), InvalidParametersError);
}

TEST_CASE("rational arithmetic agrees with cross-multiplied integers") {
    testutil::Rng rng(77001);
    for (int i = 0; i < 200; ++i) {
        Integer a(testutil::uniform(rng, -500, 500));
        Integer b(testutil::uniform(rng, 1, 500));
        Integer c(testutil::uniform(rng, -500, 500));
        Integer d(testutil::uniform(rng, 1, 500));
        Rational x(a, b), y(c, d);
        CHECK(x + y == Rational(a * d + c * b, b * d));
        CHECK(x - y == Rational(a * d - c * b, b * d));
        CHECK(x * y == Rational(a * c, b * d));
        CHECK((x < y) == (a * d < c * b));
    }
}

TEST_CASE("rational ceil") {
    CHECK(Rational(Integer(5), Integer(2)).ceil() == Integer(3));
    CHECK(Rational(Integer(4), Integer(2)).ceil() == Integer(2));
    CHECK(Rational(Integer(-5), Integer(2)).ceil() == Integer(-2));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == Integer(6));
    CHECK(pascal(10, 3) == Integer(120));
    CHECK(binomial(10, 3) == Integer(120));
    CHECK(binomial(5, 7) == Integer(0));
    CHECK(binomial(5, -1) == Integer(0));
    CHECK(binomial(0, 0) == Integer(1));
}

TEST_CASE("binomial satisfies Pascal's rule up to n = 64") {
    for (std::uint64_t n = 1; n <= 64; ++n)
        for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(19));
    CHECK(!is_prime(1));
    CHECK(!is_prime(21));
    CHECK(is_prime(2305843009213693951ull)); // 2^61 - 1
}

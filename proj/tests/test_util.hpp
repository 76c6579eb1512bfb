#ifndef CTSEQ_TEST_UTIL_HPP
#define CTSEQ_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ctseq/laurent.hpp"
#include "ctseq/parser.hpp"

namespace ctseq::testutil {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random sparse polynomial: dimension <= 3, <= 6 terms, exponents in
/// [-3, 3], coefficients in [-9, 9].
inline IntPolynomial random_poly(Rng& rng, int dim, int max_terms = 6,
                                 std::int64_t max_exp = 3, std::int64_t max_coeff = 9) {
    IntPolynomial p(dim, IntegerRing{});
    int terms = static_cast<int>(uniform(rng, 0, max_terms));
    for (int t = 0; t < terms; ++t) {
        ExponentVec e(dim);
        for (auto& c : e) c = uniform(rng, -max_exp, max_exp);
        std::int64_t c = uniform(rng, -max_coeff, max_coeff);
        if (c != 0) p.add_coeff(e, Integer(c));
    }
    return p;
}

inline IntPolynomial random_nonzero_poly(Rng& rng, int dim, int max_terms = 6,
                                         std::int64_t max_exp = 3) {
    for (;;) {
        IntPolynomial p = random_poly(rng, dim, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline std::vector<ExponentVec> random_support(Rng& rng, int dim, int max_points = 6,
                                               std::int64_t max_exp = 3) {
    std::vector<ExponentVec> pts;
    int count = static_cast<int>(uniform(rng, 1, max_points));
    for (int i = 0; i < count; ++i) {
        ExponentVec e(dim);
        for (auto& c : e) c = uniform(rng, -max_exp, max_exp);
        pts.push_back(std::move(e));
    }
    return pts;
}

inline IntPolynomial pol(const std::string& src, const ParseContext& ctx) {
    return parse(src, ctx);
}

} // namespace ctseq::testutil

#endif

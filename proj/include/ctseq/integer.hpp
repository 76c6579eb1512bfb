#ifndef CTSEQ_INTEGER_HPP
#define CTSEQ_INTEGER_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "ctseq/errors.hpp"

namespace ctseq {

/// Arbitrary-precision signed integer (GMP-backed).
class Integer {
public:
    Integer() : v_(0) {}
    Integer(int n) : v_(n) {}
    Integer(long n) : v_(n) {}
    Integer(long long n) : v_(static_cast<long>(n)) {}
    Integer(unsigned long n) : v_(n) {}
    explicit Integer(const std::string& decimal) : v_(decimal) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    const mpz_class& raw() const { return v_; }

    Integer operator-() const { return Integer(mpz_class(-v_)); }
    Integer operator+(const Integer& o) const { return Integer(mpz_class(v_ + o.v_)); }
    Integer operator-(const Integer& o) const { return Integer(mpz_class(v_ - o.v_)); }
    Integer operator*(const Integer& o) const { return Integer(mpz_class(v_ * o.v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    /// Truncated quotient; only meaningful when the division is exact here.
    Integer divided_exactly_by(const Integer& o) const {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
        return Integer(q);
    }
    bool divisible_by(const Integer& o) const {
        return mpz_divisible_p(v_.get_mpz_t(), o.v_.get_mpz_t()) != 0;
    }

    bool operator==(const Integer& o) const { return v_ == o.v_; }
    bool operator!=(const Integer& o) const { return v_ != o.v_; }
    bool operator<(const Integer& o) const { return v_ < o.v_; }
    bool operator<=(const Integer& o) const { return v_ <= o.v_; }
    bool operator>(const Integer& o) const { return v_ > o.v_; }
    bool operator>=(const Integer& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Integer abs() const { return Integer(mpz_class(::abs(v_))); }

    Integer pow(std::uint64_t e) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
        return Integer(r);
    }

    bool fits_int64() const { return v_.fits_slong_p(); }
    std::int64_t to_int64() const { return v_.get_si(); }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Integer& n) { return os << n.v_; }

private:
    mpz_class v_;
};

/// Rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(const Integer& n) : v_(n.raw()) {}
    Rational(const Integer& num, const Integer& den) : v_(num.raw(), den.raw()) {
        if (den.is_zero()) throw InvalidParametersError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
    Integer denominator() const { return Integer(mpz_class(v_.get_den())); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), already_canonical{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), already_canonical{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), already_canonical{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw InvalidParametersError("rational division by zero");
        return Rational(mpq_class(v_ / o.v_), already_canonical{});
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    /// Smallest integer >= *this.
    Integer ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return Integer(q);
    }

    /// "p/q", or just "p" for integers.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    struct already_canonical {};
    Rational(mpq_class v, already_canonical) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Three-way exact comparison.
inline int rat_cmp(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    if (a == b) return 0;
    return 1;
}

/// Binomial coefficient C(n, k); zero for k < 0 or k > n.
inline Integer binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return Integer(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return Integer(r);
}

inline bool is_prime(std::uint64_t n) {
    mpz_class v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

} // namespace ctseq

#endif

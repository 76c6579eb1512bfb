#ifndef CTSEQ_MODULAR_HPP
#define CTSEQ_MODULAR_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "ctseq/errors.hpp"
#include "ctseq/integer.hpp"

namespace ctseq {

inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 63) - 1;

inline void require_valid_modulus(std::uint64_t m) {
    if (m < 2) throw InvalidModulusError("modulus must be at least 2");
    if (m > kMaxModulus) throw InvalidModulusError("modulus must be below 2^63");
}

/// a*b mod m without overflow (128-bit intermediate).
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b; // no overflow: a, b < 2^63
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

/// Canonical residue of an arbitrary-precision integer, in [0, m).
inline std::uint64_t mod_reduce_raw(const Integer& x, std::uint64_t m) {
    require_valid_modulus(m);
    std::uint64_t r = mpz_fdiv_ui(x.raw().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

/// Integer modulo m, 2 <= m < 2^63. Residue is always reduced.
class Mod {
public:
    Mod(const Integer& x, std::uint64_t m) : r_(mod_reduce_raw(x, m)), m_(m) {}
    Mod(std::int64_t x, std::uint64_t m) : Mod(Integer(x), m) {}

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return m_; }
    bool is_zero() const { return r_ == 0; }

    Mod operator+(const Mod& o) const { check(o); return Mod(add_mod(r_, o.r_, m_), m_, raw_tag{}); }
    Mod operator-(const Mod& o) const { check(o); return Mod(sub_mod(r_, o.r_, m_), m_, raw_tag{}); }
    Mod operator*(const Mod& o) const { check(o); return Mod(mul_mod(r_, o.r_, m_), m_, raw_tag{}); }
    Mod operator-() const { return Mod(r_ == 0 ? 0 : m_ - r_, m_, raw_tag{}); }

    bool operator==(const Mod& o) const { check(o); return r_ == o.r_; }
    bool operator!=(const Mod& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(r_); }
    friend std::ostream& operator<<(std::ostream& os, const Mod& x) { return os << x.r_; }

private:
    struct raw_tag {};
    Mod(std::uint64_t r, std::uint64_t m, raw_tag) : r_(r), m_(m) {}
    void check(const Mod& o) const {
        if (m_ != o.m_)
            throw ModulusMismatchError("mixed moduli " + std::to_string(m_) + " and " +
                                       std::to_string(o.m_));
    }
    std::uint64_t r_;
    std::uint64_t m_;
};

inline Mod mod_reduce(const Integer& x, std::uint64_t m) { return Mod(x, m); }

} // namespace ctseq

#endif

#ifndef CTSEQ_RINGS_HPP
#define CTSEQ_RINGS_HPP

#include <cstdint>
#include <string>

#include "ctseq/integer.hpp"
#include "ctseq/modular.hpp"

namespace ctseq {

/// Coefficient ring tag: exact arbitrary-precision integers.
struct IntegerRing {
    using Elem = Integer;

    Elem zero() const { return Integer(0); }
    Elem one() const { return Integer(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    void add_assign(Elem& a, const Elem& b) const { a += b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool same(const IntegerRing&) const { return true; }
    std::string elem_str(const Elem& a) const { return a.str(); }
    std::string name() const { return "Z"; }
};

/// Coefficient ring tag: integers modulo m, residues stored raw in [0, m).
struct ModRing {
    explicit ModRing(std::uint64_t m) : modulus(m) { require_valid_modulus(m); }

    std::uint64_t modulus;

    using Elem = std::uint64_t;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return add_mod(a, b, modulus); }
    Elem sub(Elem a, Elem b) const { return sub_mod(a, b, modulus); }
    Elem mul(Elem a, Elem b) const { return mul_mod(a, b, modulus); }
    Elem neg(Elem a) const { return a == 0 ? 0 : modulus - a; }
    void add_assign(Elem& a, Elem b) const { a = add_mod(a, b, modulus); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool same(const ModRing& o) const { return modulus == o.modulus; }
    std::string elem_str(Elem a) const { return std::to_string(a); }
    std::string name() const { return "Z/" + std::to_string(modulus); }
};

} // namespace ctseq

#endif

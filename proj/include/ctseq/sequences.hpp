#ifndef CTSEQ_SEQUENCES_HPP
#define CTSEQ_SEQUENCES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctseq/laurent.hpp"
#include "ctseq/parser.hpp"

#include <json.hpp>

namespace ctseq {

/// Constant-term representation A(n) = ct[P^n Q].
struct CTRep {
    IntPolynomial P;
    IntPolynomial Q;

    CTRep(IntPolynomial P_, IntPolynomial Q_);
    explicit CTRep(IntPolynomial P_); // Q = 1

    int dimension() const { return P.dimension(); }
};

inline IntPolynomial to_ring(const IntPolynomial& p, const IntegerRing&) { return p; }
inline ModPolynomial to_ring(const IntPolynomial& p, const ModRing& r) {
    return reduce_mod(p, r.modulus);
}

/// [A(0), ..., A(N)] by iterated multiplication with P (one mul per step).
template <class R>
std::vector<typename R::Elem> ct_prefix(const CTRep& rep, std::uint64_t N, const R& ring) {
    auto P = to_ring(rep.P, ring);
    auto F = to_ring(rep.Q, ring);
    std::vector<typename R::Elem> out;
    out.reserve(N + 1);
    out.push_back(F.constant_term());
    for (std::uint64_t n = 1; n <= N; ++n) {
        F = F * P;
        out.push_back(F.constant_term());
    }
    return out;
}

/// Modular prefix: dense bounding-box accumulation when the final box fits
/// in memory, otherwise the sparse product above.
std::vector<std::uint64_t> ct_prefix(const CTRep& rep, std::uint64_t N, const ModRing& ring);

/// Point query A(n) via binary powering.
template <class R>
typename R::Elem ct_at(const CTRep& rep, std::uint64_t n, const R& ring) {
    auto P = to_ring(rep.P, ring);
    auto Q = to_ring(rep.Q, ring);
    return (P.pow(n) * Q).constant_term();
}

// Binomial-sum generators, independent of the polynomial machinery.
Integer oracle_u(std::uint64_t n);
Integer oracle_uab(int eps, std::int64_t a, std::int64_t b, std::uint64_t n);
Integer oracle_w(std::uint64_t n); // defined for n >= 1
Integer oracle_apery(std::uint64_t n);
Integer oracle_delannoy3(std::uint64_t n);

/// Laurent representation of the alternating binomial-power sums: dimension
/// a+b-1 with the product form, or the one-variable form for (a, b) = (1, 0).
CTRep build_uab_poly(int eps, std::int64_t a, std::int64_t b);

struct OracleSpec {
    std::string name; // "u" | "uab" | "w_shift" | "apery" | "delannoy3"
    std::map<std::string, std::int64_t> params;

    Integer eval(std::uint64_t n) const;
};

struct CatalogEntry {
    std::string name;
    std::vector<std::string> vars;
    std::string poly_src;
    std::string q_src;
    CTRep rep;
    std::optional<OracleSpec> oracle;
    std::optional<std::uint64_t> documented_m;

    ParseContext context() const { return ParseContext(vars); }
};

/// The built-in sequence catalog.
const std::vector<CatalogEntry>& builtin_catalog();

const CatalogEntry* catalog_find(const std::vector<CatalogEntry>& entries,
                                 const std::string& name);

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& doc);

} // namespace ctseq

#endif

#ifndef CTSEQ_CONGRUENCES_HPP
#define CTSEQ_CONGRUENCES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ctseq/sequences.hpp"

#include <json.hpp>

namespace ctseq {

struct Counterexample {
    std::uint64_t n;
    std::uint64_t lhs; // residues, reproducible from the sequence on demand
    std::uint64_t rhs;
};

/// One verdict per digit k (per n for the digit-product check, per power r
/// for the Gauss check).
struct Verdict {
    std::int64_t k = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::optional<bool> structural; // companion check only: R_k = A(k) * Q_c
};

struct CongruenceReport {
    std::string check;
    std::uint64_t prime = 0;
    int power = 1;
    std::uint64_t n_max = 0;
    std::uint64_t m_used = 0;
    std::int64_t guaranteed_k = 0; // verdict keys below this bound are covered
    std::int64_t observed_k = 0;   // largest K with all tested keys < K passing
    std::vector<Verdict> verdicts;
    bool sound_alarm = false; // failure inside the guaranteed range
};

nlohmann::json to_json(const CongruenceReport& report);

/// A(pn + k) = A(n) A(k) mod p for all n <= n_max and 0 <= k < p; digits
/// k < p/M are the guaranteed range. Requires Q = 1.
CongruenceReport check_partial_lucas(const CTRep& rep, std::uint64_t p, std::uint64_t n_max,
                                     std::uint64_t M);

/// A(n) = prod A(n_j) mod p over the base-p digits, for every n <= n_max
/// whose digits all satisfy n_j < p/M. Requires Q = 1.
CongruenceReport check_digit_product(const CTRep& rep, std::uint64_t p, std::uint64_t M,
                                     std::uint64_t n_max);

/// A(p^r n) = A(p^(r-1) n) mod p^r for 1 <= r <= r_max, 1 <= n <= n_max,
/// with A evaluated through the representation (modular prefix).
CongruenceReport check_gauss(const CTRep& rep, std::uint64_t p, int r_max, std::uint64_t n_max);

/// Same sweep with A supplied externally (e.g. an exact binomial-sum oracle,
/// the practical route for multivariate representations at large indices).
CongruenceReport check_gauss_exact(const std::function<Integer(std::uint64_t)>& seq,
                                   std::uint64_t p, int r_max, std::uint64_t n_max);

/// R_k = Cartier_p[(P mod p)^k]; ct[P^n R_k] = A(pn + k) mod p.
ModPolynomial cartier_residue(const CTRep& rep, std::uint64_t p, std::uint64_t k);

/// Two layers per k in [k_lo, k_hi]: structurally R_k = A(k) * Q_c over Z/p,
/// and numerically A(pn + k) = ct[P^n Q_c] * A(k) mod p for n <= n_max.
/// `theorem_guaranteed` marks the k-range as covered (soundness-alarm scope).
CongruenceReport check_companion(const CTRep& rep, const IntPolynomial& companion_q,
                                 std::uint64_t p, std::uint64_t k_lo, std::uint64_t k_hi,
                                 std::uint64_t n_max, bool theorem_guaranteed = false);

/// General-Q variant: A(pn + k) = A(k) B(n) mod p with B(n) = ct[P^n],
/// guaranteed for k * deg(P) + deg(Q) < p.
CongruenceReport check_lucasx_with_q(const CTRep& rep, std::uint64_t p, std::uint64_t n_max);

/// Prime-cube congruence of the alternating binomial-power sum at n = p:
/// sum = 1 + (-1)^eps 2^b mod p^3 for primes p >= 5.
CongruenceReport check_wolstenholme(int eps, std::int64_t a, std::int64_t b, std::uint64_t p);

/// pow(P mod p, p) == P(x^p) mod p.
bool frobenius_property_check(const IntPolynomial& P, std::uint64_t p);

} // namespace ctseq

#endif

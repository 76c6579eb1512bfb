#include "ctseq/congruences.hpp"

#include <algorithm>

namespace ctseq {

namespace {

void require_q_one(const CTRep& rep, const char* what) {
    if (!(rep.Q == IntPolynomial::one(rep.dimension(), IntegerRing{})))
        throw InvalidParametersError(std::string(what) + " requires Q = 1");
}

// Largest K such that every verdict with key < K passes; keys are assumed
// sorted ascending starting at `first_key`.
std::int64_t observed_bound(const std::vector<Verdict>& verdicts, std::int64_t first_key) {
    std::int64_t bound = first_key;
    for (const auto& v : verdicts) {
        if (!v.pass) break;
        bound = v.k + 1;
    }
    return bound;
}

std::uint64_t checked_pow_u64(std::uint64_t base, int exp) {
    unsigned __int128 v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > kMaxModulus)
            throw ModulusTooLargeError("p^r does not fit below 2^63");
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace

nlohmann::json to_json(const CongruenceReport& report) {
    nlohmann::json j;
    j["check"] = report.check;
    j["prime"] = report.prime;
    j["power"] = report.power;
    j["n_max"] = report.n_max;
    j["m_used"] = report.m_used;
    j["guaranteed_k"] = report.guaranteed_k;
    j["observed_k"] = report.observed_k;
    auto verdicts = nlohmann::json::array();
    for (const auto& v : report.verdicts) {
        nlohmann::json jv;
        jv["k"] = v.k;
        jv["pass"] = v.pass;
        if (v.counterexample) {
            jv["counterexample"] = {{"n", v.counterexample->n},
                                    {"lhs", v.counterexample->lhs},
                                    {"rhs", v.counterexample->rhs}};
        } else {
            jv["counterexample"] = nullptr;
        }
        if (v.structural) jv["structural_pass"] = *v.structural;
        verdicts.push_back(jv);
    }
    j["verdicts"] = verdicts;
    j["sound_alarm"] = report.sound_alarm;
    return j;
}

CongruenceReport check_partial_lucas(const CTRep& rep, std::uint64_t p, std::uint64_t n_max,
                                     std::uint64_t M) {
    require_q_one(rep, "partial Lucas check");
    if (M < 1) throw InvalidParametersError("digit bound M must be at least 1");
    if (n_max < 1) throw InvalidParametersError("n_max must be at least 1");
    ModRing ring(p);
    const auto A = ct_prefix(rep, p * n_max + p - 1, ring);

    CongruenceReport report;
    report.check = "lucas";
    report.prime = p;
    report.n_max = n_max;
    report.m_used = M;
    report.guaranteed_k = static_cast<std::int64_t>((p + M - 1) / M); // #{k : k < p/M}
    for (std::uint64_t k = 0; k < p; ++k) {
        Verdict v;
        v.k = static_cast<std::int64_t>(k);
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            std::uint64_t lhs = A[p * n + k];
            std::uint64_t rhs = ring.mul(A[n], A[k]);
            if (lhs != rhs) {
                v.pass = false;
                v.counterexample = Counterexample{n, lhs, rhs};
                break;
            }
        }
        if (!v.pass && v.k < report.guaranteed_k) report.sound_alarm = true;
        report.verdicts.push_back(std::move(v));
    }
    report.observed_k = observed_bound(report.verdicts, 0);
    return report;
}

CongruenceReport check_digit_product(const CTRep& rep, std::uint64_t p, std::uint64_t M,
                                     std::uint64_t n_max) {
    require_q_one(rep, "digit-product check");
    if (M < 1) throw InvalidParametersError("digit bound M must be at least 1");
    ModRing ring(p);
    const auto A = ct_prefix(rep, n_max, ring);

    CongruenceReport report;
    report.check = "digits";
    report.prime = p;
    report.n_max = n_max;
    report.m_used = M;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        std::uint64_t rest = n;
        std::uint64_t product = 1;
        bool qualifies = true;
        while (rest > 0) {
            std::uint64_t digit = rest % p;
            if (digit * M >= p) { // digit < p/M fails
                qualifies = false;
                break;
            }
            product = ring.mul(product, A[digit]);
            rest /= p;
        }
        if (!qualifies) continue;
        Verdict v;
        v.k = static_cast<std::int64_t>(n);
        if (A[n] != product) {
            v.pass = false;
            v.counterexample = Counterexample{n, A[n], product};
            report.sound_alarm = true; // every qualifying n is covered
        }
        report.verdicts.push_back(std::move(v));
    }
    report.guaranteed_k = static_cast<std::int64_t>(n_max) + 1;
    report.observed_k = report.sound_alarm
                            ? std::find_if(report.verdicts.begin(), report.verdicts.end(),
                                           [](const Verdict& v) { return !v.pass; })
                                  ->k
                            : report.guaranteed_k;
    return report;
}

namespace {

CongruenceReport gauss_sweep(const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& at,
                             std::uint64_t p, int r_max, std::uint64_t n_max) {
    if (r_max < 1) throw InvalidParametersError("r_max must be at least 1");
    checked_pow_u64(p, r_max);

    CongruenceReport report;
    report.check = "gauss";
    report.prime = p;
    report.power = r_max;
    report.n_max = n_max;
    report.guaranteed_k = r_max + 1; // all 1 <= r <= r_max are covered
    for (int r = 1; r <= r_max; ++r) {
        std::uint64_t mod = checked_pow_u64(p, r);
        std::uint64_t prev = mod / p;
        Verdict v;
        v.k = r;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            std::uint64_t lhs = at(mod * n, mod);
            std::uint64_t rhs = at(prev * n, mod);
            if (lhs != rhs) {
                v.pass = false;
                v.counterexample = Counterexample{n, lhs, rhs};
                report.sound_alarm = true;
                break;
            }
        }
        report.verdicts.push_back(std::move(v));
    }
    report.observed_k = observed_bound(report.verdicts, 1);
    return report;
}

} // namespace

CongruenceReport check_gauss(const CTRep& rep, std::uint64_t p, int r_max, std::uint64_t n_max) {
    if (r_max < 1) throw InvalidParametersError("r_max must be at least 1");
    checked_pow_u64(p, r_max);
    // One modular prefix per power r; indices reach p^r * n_max.
    std::vector<std::vector<std::uint64_t>> prefix(static_cast<std::size_t>(r_max) + 1);
    for (int r = 1; r <= r_max; ++r) {
        std::uint64_t mod = checked_pow_u64(p, r);
        prefix[static_cast<std::size_t>(r)] = ct_prefix(rep, mod * n_max, ModRing(mod));
    }
    auto at = [&](std::uint64_t index, std::uint64_t mod) {
        for (int r = 1; r <= r_max; ++r)
            if (checked_pow_u64(p, r) == mod) return prefix[static_cast<std::size_t>(r)][index];
        throw std::logic_error("gauss: unexpected modulus");
    };
    return gauss_sweep(at, p, r_max, n_max);
}

CongruenceReport check_gauss_exact(const std::function<Integer(std::uint64_t)>& seq,
                                   std::uint64_t p, int r_max, std::uint64_t n_max) {
    auto at = [&](std::uint64_t index, std::uint64_t mod) {
        return mod_reduce_raw(seq(index), mod);
    };
    return gauss_sweep(at, p, r_max, n_max);
}

ModPolynomial cartier_residue(const CTRep& rep, std::uint64_t p, std::uint64_t k) {
    require_q_one(rep, "Cartier residue");
    if (k >= p) throw InvalidParametersError("Cartier residue requires 0 <= k < p");
    return reduce_mod(rep.P, p).pow(k).cartier(p);
}

CongruenceReport check_companion(const CTRep& rep, const IntPolynomial& companion_q,
                                 std::uint64_t p, std::uint64_t k_lo, std::uint64_t k_hi,
                                 std::uint64_t n_max, bool theorem_guaranteed) {
    require_q_one(rep, "companion check");
    if (k_lo > k_hi || k_hi >= p)
        throw InvalidParametersError("companion check requires 0 <= k_lo <= k_hi < p");
    if (companion_q.dimension() != rep.dimension())
        throw ArityError("companion polynomial dimension differs from P");

    ModRing ring(p);
    const auto A = ct_prefix(rep, p * n_max + p - 1, ring);
    const auto B = ct_prefix(CTRep(rep.P, companion_q), n_max, ring);
    const ModPolynomial P_mod = reduce_mod(rep.P, p);
    const ModPolynomial Qc_mod = reduce_mod(companion_q, p);

    CongruenceReport report;
    report.check = "companion";
    report.prime = p;
    report.n_max = n_max;
    report.guaranteed_k =
        theorem_guaranteed ? static_cast<std::int64_t>(k_hi) + 1 : static_cast<std::int64_t>(k_lo);
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
        Verdict v;
        v.k = static_cast<std::int64_t>(k);
        ModPolynomial residue = P_mod.pow(k).cartier(p);
        ModPolynomial factored =
            Qc_mod * ModPolynomial::constant(rep.dimension(), ring, A[k]);
        v.structural = (residue == factored);
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            std::uint64_t lhs = A[p * n + k];
            std::uint64_t rhs = ring.mul(B[n], A[k]);
            if (lhs != rhs) {
                v.pass = false;
                v.counterexample = Counterexample{n, lhs, rhs};
                break;
            }
        }
        if (theorem_guaranteed && (!v.pass || !*v.structural)) report.sound_alarm = true;
        report.verdicts.push_back(std::move(v));
    }
    report.observed_k = observed_bound(report.verdicts, static_cast<std::int64_t>(k_lo));
    return report;
}

CongruenceReport check_lucasx_with_q(const CTRep& rep, std::uint64_t p, std::uint64_t n_max) {
    ModRing ring(p);
    const auto A = ct_prefix(rep, p * n_max + p - 1, ring);
    const auto B = ct_prefix(CTRep(rep.P), n_max, ring);

    CongruenceReport report;
    report.check = "lucasx";
    report.prime = p;
    report.n_max = n_max;
    std::int64_t deg_p = rep.P.degree_sup();
    report.m_used = static_cast<std::uint64_t>(deg_p);
    if (rep.Q.is_zero()) {
        // Zero sequence: everything holds, nothing to bound by degrees.
        report.guaranteed_k = static_cast<std::int64_t>(p);
    } else {
        std::int64_t deg_q = rep.Q.degree_sup();
        std::int64_t count = 0;
        while (count < static_cast<std::int64_t>(p) &&
               count * deg_p + deg_q < static_cast<std::int64_t>(p))
            ++count;
        report.guaranteed_k = count;
    }
    for (std::uint64_t k = 0; k < p; ++k) {
        Verdict v;
        v.k = static_cast<std::int64_t>(k);
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            std::uint64_t lhs = A[p * n + k];
            std::uint64_t rhs = ring.mul(A[k], B[n]);
            if (lhs != rhs) {
                v.pass = false;
                v.counterexample = Counterexample{n, lhs, rhs};
                break;
            }
        }
        if (!v.pass && v.k < report.guaranteed_k) report.sound_alarm = true;
        report.verdicts.push_back(std::move(v));
    }
    report.observed_k = observed_bound(report.verdicts, 0);
    return report;
}

CongruenceReport check_wolstenholme(int eps, std::int64_t a, std::int64_t b, std::uint64_t p) {
    if (p < 5 || !is_prime(p))
        throw InvalidParametersError("prime-cube check requires a prime p >= 5");
    bool eps_even = (eps % 2) == 0;
    if (eps_even && ((a == 0 && b == 1) || (a == 1 && b == 0)))
        throw ExcludedParameterTripleError("(eps, a, b) = (0, 0, 1) and (0, 1, 0) are excluded");
    std::uint64_t mod = checked_pow_u64(p, 3);
    Integer lhs_exact = oracle_uab(eps, a, b, p);
    Integer rhs_exact = Integer(1) + (eps_even ? Integer(1) : Integer(-1)) *
                                         Integer(2).pow(static_cast<std::uint64_t>(b));
    std::uint64_t lhs = mod_reduce_raw(lhs_exact, mod);
    std::uint64_t rhs = mod_reduce_raw(rhs_exact, mod);

    CongruenceReport report;
    report.check = "wolstenholme";
    report.prime = p;
    report.power = 3;
    report.guaranteed_k = 1;
    Verdict v;
    v.k = 0;
    v.pass = (lhs == rhs);
    if (!v.pass) {
        v.counterexample = Counterexample{p, lhs, rhs};
        report.sound_alarm = true;
    }
    report.verdicts.push_back(std::move(v));
    report.observed_k = observed_bound(report.verdicts, 0);
    return report;
}

bool frobenius_property_check(const IntPolynomial& P, std::uint64_t p) {
    ModPolynomial reduced = reduce_mod(P, p);
    return reduced.pow(p) == reduced.frobenius_substitute(p);
}

} // namespace ctseq

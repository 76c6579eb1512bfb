#ifndef CTSEQ_LAURENT_HPP
#define CTSEQ_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctseq/errors.hpp"
#include "ctseq/rings.hpp"

namespace ctseq {

/// Exponent vector of a Laurent monomial; length is the ambient dimension.
using ExponentVec = std::vector<std::int64_t>;

struct ExponentHash {
    std::size_t operator()(const ExponentVec& e) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t c : e) {
            h ^= static_cast<std::uint64_t>(c);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Canonical term order: descending lexicographic on the exponent vector.
inline bool lex_greater(const ExponentVec& a, const ExponentVec& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

/// Sparse multivariate Laurent polynomial over a coefficient ring R.
///
/// Terms live in a hash map with no stored zeros; the canonical
/// descending-lex order is produced on demand for iteration.
template <class R>
class Polynomial {
public:
    using Ring = R;
    using Elem = typename R::Elem;
    using TermMap = std::unordered_map<ExponentVec, Elem, ExponentHash>;

    Polynomial(int dimension, R ring) : dim_(dimension), ring_(std::move(ring)) {
        if (dim_ < 1) throw ArityError("polynomial dimension must be at least 1");
    }

    static Polynomial zero(int dimension, R ring) { return Polynomial(dimension, std::move(ring)); }

    static Polynomial constant(int dimension, R ring, const Elem& c) {
        Polynomial p(dimension, std::move(ring));
        p.set_coeff(ExponentVec(dimension, 0), c);
        return p;
    }

    static Polynomial one(int dimension, R ring) {
        Elem c = ring.one();
        return constant(dimension, std::move(ring), c);
    }

    static Polynomial monomial(int dimension, R ring, const ExponentVec& e, const Elem& c) {
        Polynomial p(dimension, std::move(ring));
        if (static_cast<int>(e.size()) != dimension)
            throw ArityError("exponent vector length differs from dimension");
        p.set_coeff(e, c);
        return p;
    }

    int dimension() const { return dim_; }
    const R& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Inserts/overwrites one term, dropping it if the coefficient is zero.
    void set_coeff(const ExponentVec& e, const Elem& c) {
        if (ring_.is_zero(c))
            terms_.erase(e);
        else
            terms_[e] = c;
    }

    /// Adds into one term, erasing it if the sum cancels.
    void add_coeff(const ExponentVec& e, const Elem& c) {
        if (ring_.is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            ring_.add_assign(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Elem coeff(const ExponentVec& e) const {
        if (static_cast<int>(e.size()) != dim_)
            throw ArityError("exponent vector length differs from dimension");
        auto it = terms_.find(e);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    Elem constant_term() const {
        auto it = terms_.find(ExponentVec(dim_, 0));
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    std::vector<ExponentVec> support() const {
        std::vector<ExponentVec> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        std::sort(s.begin(), s.end(), lex_greater);
        return s;
    }

    /// Terms in canonical (descending lex) order.
    std::vector<std::pair<ExponentVec, Elem>> sorted_terms() const {
        std::vector<std::pair<ExponentVec, Elem>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return lex_greater(a.first, b.first); });
        return out;
    }

    /// Largest exponent of any variable or its inverse: max |e_i| over the support.
    std::int64_t degree_sup() const {
        if (terms_.empty()) throw DegreeOfZeroError("degree of the zero polynomial");
        std::int64_t d = 0;
        for (const auto& [e, c] : terms_)
            for (std::int64_t x : e) d = std::max(d, x < 0 ? -x : x);
        return d;
    }

    Polynomial operator-() const {
        Polynomial r(dim_, ring_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_coeff(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_coeff(e, ring_.neg(c));
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r(dim_, ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        ExponentVec sum(dim_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                for (int i = 0; i < dim_; ++i) sum[i] = e1[i] + e2[i];
                r.add_coeff(sum, ring_.mul(c1, c2));
            }
        }
        return r;
    }

    /// Binary exponentiation; pow(P, 0) is the constant 1.
    Polynomial pow(std::uint64_t n) const {
        Polynomial result = one(dim_, ring_);
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

    /// Keeps terms with exponents componentwise divisible by p, dividing them by p.
    Polynomial cartier(std::uint64_t p) const {
        if (p < 2) throw InvalidParametersError("cartier requires p >= 2");
        const auto sp = static_cast<std::int64_t>(p);
        Polynomial r(dim_, ring_);
        ExponentVec quot(dim_);
        for (const auto& [e, c] : terms_) {
            bool all = true;
            for (int i = 0; i < dim_; ++i) {
                if (e[i] % sp != 0) { all = false; break; }
                quot[i] = e[i] / sp;
            }
            if (all) r.terms_.emplace(quot, c);
        }
        return r;
    }

    /// Substitutes x_i -> x_i^p: multiplies every exponent vector by p.
    Polynomial frobenius_substitute(std::uint64_t p) const {
        if (p < 2) throw InvalidParametersError("frobenius_substitute requires p >= 2");
        const auto sp = static_cast<std::int64_t>(p);
        Polynomial r(dim_, ring_);
        ExponentVec scaled(dim_);
        for (const auto& [e, c] : terms_) {
            for (int i = 0; i < dim_; ++i) scaled[i] = e[i] * sp;
            r.terms_.emplace(scaled, c);
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (dim_ != o.dim_ || !ring_.same(o.ring_) || terms_.size() != o.terms_.size())
            return false;
        for (const auto& [e, c] : terms_) {
            auto it = o.terms_.find(e);
            if (it == o.terms_.end() || !ring_.eq(c, it->second)) return false;
        }
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void check_compatible(const Polynomial& o) const {
        if (dim_ != o.dim_)
            throw ArityError("dimension mismatch: " + std::to_string(dim_) + " vs " +
                             std::to_string(o.dim_));
        if (!ring_.same(o.ring_))
            throw ArityError("coefficient ring mismatch: " + ring_.name() + " vs " +
                             o.ring_.name());
    }

    int dim_;
    R ring_;
    TermMap terms_;
};

using IntPolynomial = Polynomial<IntegerRing>;
using ModPolynomial = Polynomial<ModRing>;

/// Coefficientwise reduction Z -> Z/m, dropping vanishing terms.
inline ModPolynomial reduce_mod(const IntPolynomial& p, std::uint64_t m) {
    ModRing ring(m);
    ModPolynomial r(p.dimension(), ring);
    for (const auto& [e, c] : p.terms()) r.add_coeff(e, mod_reduce_raw(c, m));
    return r;
}

} // namespace ctseq

#endif

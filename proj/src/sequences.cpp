#include "ctseq/sequences.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ctseq/errors.hpp"

namespace ctseq {

CTRep::CTRep(IntPolynomial P_, IntPolynomial Q_) : P(std::move(P_)), Q(std::move(Q_)) {
    if (P.dimension() != Q.dimension())
        throw ArityError("P and Q dimensions differ");
    if (P.is_zero()) throw InvalidParametersError("representation requires a nonzero P");
}

CTRep::CTRep(IntPolynomial P_)
    : CTRep(P_, IntPolynomial::one(P_.dimension(), IntegerRing{})) {}

namespace {

// Dense accumulator for the modular prefix. The running power F_n = P^n Q has
// its support inside box(Q) + n*box(P); all steps fit in the step-N box, so
// one flat buffer pair (row-major over that box) carries the whole sweep.
// Each step scatters src * P into dst through precomputed index offsets.
class DensePrefix {
public:
    static constexpr std::size_t kCellCap = 15'000'000;

    static std::optional<std::vector<std::uint64_t>> run(const ModPolynomial& P,
                                                         const ModPolynomial& Q, std::uint64_t N,
                                                         std::uint64_t m) {
        const int d = P.dimension();
        std::vector<std::int64_t> plo(d), phi(d), qlo(d), qhi(d);
        support_box(P, plo, phi);
        support_box(Q, qlo, qhi);

        std::vector<std::int64_t> glo(d), ghi(d);
        unsigned __int128 cells = 1;
        const auto sn = static_cast<std::int64_t>(N);
        for (int c = 0; c < d; ++c) {
            glo[c] = qlo[c] + std::min<std::int64_t>(0, sn * plo[c]);
            ghi[c] = qhi[c] + std::max<std::int64_t>(0, sn * phi[c]);
            cells *= static_cast<unsigned __int128>(ghi[c] - glo[c] + 1);
            if (cells > kCellCap) return std::nullopt;
        }

        // Lazy reduction: a destination cell collects at most term_count()
        // products below m^2, which must not wrap the 64-bit accumulator.
        // Staged comparison, since term_count * (m-1)^2 itself can exceed
        // 128 bits for moduli near 2^63.
        const unsigned __int128 sq = static_cast<unsigned __int128>(m - 1) * (m - 1);
        const std::uint64_t per_term_budget =
            UINT64_MAX / std::max<std::uint64_t>(P.term_count(), 1);
        if (sq > per_term_budget) return std::nullopt;

        DensePrefix engine(P, Q, N, m, d, std::move(plo), std::move(phi), std::move(qlo),
                           std::move(qhi), std::move(glo), std::move(ghi),
                           static_cast<std::size_t>(cells));
        return engine.sweep();
    }

private:
    DensePrefix(const ModPolynomial& P, const ModPolynomial& Q, std::uint64_t N, std::uint64_t m,
                int d, std::vector<std::int64_t> plo, std::vector<std::int64_t> phi,
                std::vector<std::int64_t> qlo, std::vector<std::int64_t> qhi,
                std::vector<std::int64_t> glo, std::vector<std::int64_t> ghi, std::size_t cells)
        : P_(P), Q_(Q), N_(N), m_(m), d_(d), plo_(std::move(plo)), phi_(std::move(phi)),
          qlo_(std::move(qlo)), qhi_(std::move(qhi)), glo_(std::move(glo)),
          ghi_(std::move(ghi)), src_(cells, 0), dst_(cells, 0) {
        stride_.assign(static_cast<std::size_t>(d_), 1);
        for (int c = d_ - 2; c >= 0; --c)
            stride_[static_cast<std::size_t>(c)] =
                stride_[static_cast<std::size_t>(c + 1)] *
                static_cast<std::size_t>(ghi_[static_cast<std::size_t>(c + 1)] -
                                         glo_[static_cast<std::size_t>(c + 1)] + 1);
        for (const auto& [e, coeff] : P_.terms()) {
            std::int64_t off = 0;
            for (int c = 0; c < d_; ++c)
                off += e[static_cast<std::size_t>(c)] *
                       static_cast<std::int64_t>(stride_[static_cast<std::size_t>(c)]);
            taps_.emplace_back(off, coeff);
        }
    }

    static void support_box(const ModPolynomial& p, std::vector<std::int64_t>& lo,
                            std::vector<std::int64_t>& hi) {
        bool first = true;
        for (const auto& [e, coeff] : p.terms()) {
            for (std::size_t c = 0; c < e.size(); ++c) {
                if (first) {
                    lo[c] = hi[c] = e[c];
                } else {
                    lo[c] = std::min(lo[c], e[c]);
                    hi[c] = std::max(hi[c], e[c]);
                }
            }
            first = false;
        }
    }

    std::int64_t flat(const std::vector<std::int64_t>& v) const {
        std::int64_t idx = 0;
        for (int c = 0; c < d_; ++c)
            idx += (v[static_cast<std::size_t>(c)] - glo_[static_cast<std::size_t>(c)]) *
                   static_cast<std::int64_t>(stride_[static_cast<std::size_t>(c)]);
        return idx;
    }

    // Row-major traversal of the sub-box [lo, hi]; f sees flat indices.
    template <class F>
    void for_each(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                  F&& f) const {
        std::vector<std::int64_t> cur = lo;
        const std::size_t last = static_cast<std::size_t>(d_) - 1;
        const std::size_t run = static_cast<std::size_t>(hi[last] - lo[last] + 1);
        for (;;) {
            std::int64_t base = flat(cur);
            for (std::size_t i = 0; i < run; ++i) f(base + static_cast<std::int64_t>(i));
            int c = d_ - 2;
            while (c >= 0 && cur[static_cast<std::size_t>(c)] == hi[static_cast<std::size_t>(c)]) {
                cur[static_cast<std::size_t>(c)] = lo[static_cast<std::size_t>(c)];
                --c;
            }
            if (c < 0) break;
            ++cur[static_cast<std::size_t>(c)];
        }
    }

    std::vector<std::uint64_t> sweep() {
        std::vector<std::uint64_t> out;
        out.reserve(N_ + 1);
        for (const auto& [e, coeff] : Q_.terms()) src_[static_cast<std::size_t>(flat(e))] = coeff;
        out.push_back(Q_.constant_term());

        std::vector<std::int64_t> slo(static_cast<std::size_t>(d_)),
            shi(static_cast<std::size_t>(d_));
        const std::vector<std::int64_t> origin(static_cast<std::size_t>(d_), 0);
        for (std::uint64_t n = 1; n <= N_; ++n) {
            const auto sn = static_cast<std::int64_t>(n);
            std::fill(dst_.begin(), dst_.end(), 0);
            for (int c = 0; c < d_; ++c) {
                slo[static_cast<std::size_t>(c)] =
                    qlo_[static_cast<std::size_t>(c)] + (sn - 1) * plo_[static_cast<std::size_t>(c)];
                shi[static_cast<std::size_t>(c)] =
                    qhi_[static_cast<std::size_t>(c)] + (sn - 1) * phi_[static_cast<std::size_t>(c)];
            }
            for_each(slo, shi, [&](std::int64_t idx) {
                std::uint64_t v = src_[static_cast<std::size_t>(idx)];
                if (!v) return;
                for (const auto& [off, coeff] : taps_)
                    dst_[static_cast<std::size_t>(idx + off)] += v * coeff;
            });
            for (int c = 0; c < d_; ++c) {
                slo[static_cast<std::size_t>(c)] += plo_[static_cast<std::size_t>(c)];
                shi[static_cast<std::size_t>(c)] += phi_[static_cast<std::size_t>(c)];
            }
            for_each(slo, shi,
                     [&](std::int64_t idx) { dst_[static_cast<std::size_t>(idx)] %= m_; });
            src_.swap(dst_);
            bool origin_inside = true;
            for (int c = 0; c < d_; ++c)
                origin_inside = origin_inside && slo[static_cast<std::size_t>(c)] <= 0 &&
                                0 <= shi[static_cast<std::size_t>(c)];
            out.push_back(origin_inside ? src_[static_cast<std::size_t>(flat(origin))] : 0);
        }
        return out;
    }

    const ModPolynomial& P_;
    const ModPolynomial& Q_;
    std::uint64_t N_;
    std::uint64_t m_;
    int d_;
    std::vector<std::int64_t> plo_, phi_, qlo_, qhi_, glo_, ghi_;
    std::vector<std::size_t> stride_;
    std::vector<std::pair<std::int64_t, std::uint64_t>> taps_;
    std::vector<std::uint64_t> src_, dst_;
};

} // namespace

std::vector<std::uint64_t> ct_prefix(const CTRep& rep, std::uint64_t N, const ModRing& ring) {
    ModPolynomial P = reduce_mod(rep.P, ring.modulus);
    ModPolynomial Q = reduce_mod(rep.Q, ring.modulus);
    std::vector<std::uint64_t> out;
    if (P.is_zero() || Q.is_zero()) { // P may vanish mod m even though P != 0
        out.assign(N + 1, 0);
        out[0] = Q.constant_term();
        return out;
    }
    if (N > 0)
        if (auto dense = DensePrefix::run(P, Q, N, ring.modulus)) return *dense;
    out.reserve(N + 1);
    ModPolynomial F = Q;
    out.push_back(F.constant_term());
    for (std::uint64_t n = 1; n <= N; ++n) {
        F = F * P;
        out.push_back(F.constant_term());
    }
    return out;
}

Integer oracle_u(std::uint64_t n) { return oracle_uab(1, 1, 1, n); }

Integer oracle_uab(int eps, std::int64_t a, std::int64_t b, std::uint64_t n) {
    if (a < 1 || b < 0)
        throw InvalidParametersError("uab sum requires a >= 1 and b >= 0");
    const bool alternating = (eps % 2) != 0;
    Integer total(0);
    for (std::uint64_t k = 0; k <= n; ++k) {
        Integer term = binomial(n, static_cast<std::int64_t>(k)).pow(static_cast<std::uint64_t>(a));
        if (b > 0)
            term *= binomial(2 * n, static_cast<std::int64_t>(k)).pow(static_cast<std::uint64_t>(b));
        if (alternating && (k & 1)) term = -term;
        total += term;
    }
    return total;
}

Integer oracle_w(std::uint64_t n) {
    if (n < 1) throw InvalidParametersError("w(n) is defined for n >= 1");
    Integer total(0);
    for (std::uint64_t k = 0; k < n; ++k) {
        Integer term = binomial(2 * n - 1, static_cast<std::int64_t>(k)) *
                       binomial(n - 1, static_cast<std::int64_t>(k));
        if (k & 1) term = -term;
        total += term;
    }
    return total;
}

Integer oracle_apery(std::uint64_t n) {
    Integer total(0);
    for (std::uint64_t k = 0; k <= n; ++k) {
        Integer bk = binomial(n, static_cast<std::int64_t>(k));
        Integer bnk = binomial(n + k, static_cast<std::int64_t>(k));
        total += bk * bk * bnk * bnk;
    }
    return total;
}

Integer oracle_delannoy3(std::uint64_t n) {
    Integer total(0);
    for (std::uint64_t k = 0; k <= n; ++k)
        total += binomial(n, static_cast<std::int64_t>(k)) *
                 binomial(n + k, static_cast<std::int64_t>(k)) *
                 binomial(n + 2 * k, static_cast<std::int64_t>(k));
    return total;
}

CTRep build_uab_poly(int eps, std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 0)
        throw InvalidParametersError("uab polynomial requires a >= 1 and b >= 0");
    const Integer sign((eps % 2) != 0 ? -1 : 1);

    if (a + b - 1 < 1) {
        // (a, b) = (1, 0): the product form would have no variables left, so
        // use the one-variable stand-in (1 + (-1)^eps/x)(1 + x).
        IntegerRing zz;
        IntPolynomial p = IntPolynomial::monomial(1, zz, {-1}, sign) + IntPolynomial::one(1, zz);
        p = p * (IntPolynomial::monomial(1, zz, {1}, Integer(1)) + IntPolynomial::one(1, zz));
        return CTRep(p);
    }

    const int d = static_cast<int>(a + b - 1);
    IntegerRing zz;
    IntPolynomial p = IntPolynomial::one(d, zz) +
                      IntPolynomial::monomial(d, zz, ExponentVec(d, -1), sign);
    for (int i = 0; i < d; ++i) {
        ExponentVec e(d, 0);
        e[i] = 1;
        IntPolynomial lin = IntPolynomial::one(d, zz) +
                            IntPolynomial::monomial(d, zz, e, Integer(1));
        p = p * lin;                    // (1 + x_i)
        if (i >= a - 1) p = p * lin;    // squared for the last b variables
    }
    return CTRep(p);
}

Integer OracleSpec::eval(std::uint64_t n) const {
    auto param = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end())
            throw InvalidParametersError(std::string("oracle '") + name +
                                         "' is missing parameter '" + key + "'");
        return it->second;
    };
    if (name == "u") return oracle_u(n);
    if (name == "uab")
        return oracle_uab(static_cast<int>(param("eps")), param("a"), param("b"), n);
    if (name == "w_shift") return oracle_w(n + 1);
    if (name == "apery") return oracle_apery(n);
    if (name == "delannoy3") return oracle_delannoy3(n);
    throw InvalidParametersError("unknown oracle '" + name + "'");
}

namespace {

CatalogEntry make_entry(std::string name, std::vector<std::string> vars, std::string poly,
                        std::string q, std::optional<OracleSpec> oracle,
                        std::optional<std::uint64_t> documented_m) {
    ParseContext ctx(vars);
    CTRep rep(parse(poly, ctx), parse(q, ctx));
    CatalogEntry entry{std::move(name), std::move(vars),    std::move(poly), std::move(q),
                       std::move(rep),  std::move(oracle),  documented_m};
    if (!entry.rep.Q.constant_term().is_one() ||
        (entry.oracle && !entry.oracle->eval(0).is_one()))
        throw InvalidParametersError("catalog entry '" + entry.name + "' has A(0) != 1");
    return entry;
}

OracleSpec uab_oracle(int eps, std::int64_t a, std::int64_t b) {
    return OracleSpec{"uab", {{"eps", eps}, {"a", a}, {"b", b}}};
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back(make_entry("u", {"x"}, "(1+x)^2*(1-1/x)", "1", OracleSpec{"u", {}}, 2));
    entries.push_back(make_entry("v", {"x"}, "(1+x)^2*(1-1/x)", "1+x",
                                 OracleSpec{"w_shift", {}}, 2));
    entries.push_back(make_entry("apery", {"x", "y", "z"},
                                 "(x+y)*(z+1)*(x+y+z)*(y+z+1)/(x*y*z)", "1",
                                 OracleSpec{"apery", {}}, 1));
    entries.push_back(make_entry("delannoy_rect", {"x", "y"},
                                 "(1+x)*(1+y)*(1+(1+x)*(1+y)^2/(x*y))", "1",
                                 OracleSpec{"delannoy3", {}}, 2));
    entries.push_back(make_entry("delannoy_tri", {"x", "y"},
                                 "(1+x+y)*(1+(1+x+y)^2/(x*y))", "1",
                                 OracleSpec{"delannoy3", {}}, 1));
    entries.push_back(make_entry(
        "eta", {"x", "y", "z"},
        "(z*x+x*y-y*z-x-1)*(x*y+y*z-z*x-y-1)*(y*z+z*x-x*y-z-1)/(x*y*z)", "1",
        std::nullopt, 2));
    // Alternating binomial-power sums used across the verification sweeps.
    for (auto [eps, a, b] : {std::array<std::int64_t, 3>{0, 2, 0},
                             std::array<std::int64_t, 3>{1, 2, 1},
                             std::array<std::int64_t, 3>{0, 1, 2}}) {
        CTRep rep = build_uab_poly(static_cast<int>(eps), a, b);
        ParseContext ctx = ParseContext::default_names(rep.dimension());
        std::string name = "uab_" + std::to_string(eps) + "_" + std::to_string(a) + "_" +
                           std::to_string(b);
        entries.push_back(make_entry(name, ctx.names(), format(rep.P, ctx), "1",
                                     uab_oracle(static_cast<int>(eps), a, b), 2));
    }
    return entries;
}

} // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::vector<CatalogEntry>& entries,
                                 const std::string& name) {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json j;
        j["name"] = e.name;
        j["vars"] = e.vars;
        j["poly"] = e.poly_src;
        j["q"] = e.q_src;
        if (e.oracle) {
            nlohmann::json o;
            o["name"] = e.oracle->name;
            o["params"] = e.oracle->params;
            j["oracle"] = o;
        } else {
            j["oracle"] = nullptr;
        }
        j["documented_m"] =
            e.documented_m ? nlohmann::json(*e.documented_m) : nlohmann::json(nullptr);
        out.push_back(j);
    }
    return out;
}

std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw InvalidParametersError("catalog file must be a JSON array");
    std::vector<CatalogEntry> entries;
    for (const auto& j : doc) {
        std::optional<OracleSpec> oracle;
        if (j.contains("oracle") && !j["oracle"].is_null()) {
            OracleSpec spec;
            spec.name = j["oracle"].at("name").get<std::string>();
            if (j["oracle"].contains("params"))
                for (const auto& [key, value] : j["oracle"]["params"].items())
                    spec.params[key] = value.get<std::int64_t>();
            oracle = std::move(spec);
        }
        std::optional<std::uint64_t> documented_m;
        if (j.contains("documented_m") && !j["documented_m"].is_null())
            documented_m = j["documented_m"].get<std::uint64_t>();
        entries.push_back(make_entry(j.at("name").get<std::string>(),
                                     j.at("vars").get<std::vector<std::string>>(),
                                     j.at("poly").get<std::string>(),
                                     j.contains("q") ? j.at("q").get<std::string>() : "1",
                                     std::move(oracle), documented_m));
    }
    return entries;
}

} // namespace ctseq

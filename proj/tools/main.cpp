// Command-line interface: polytope analysis, sequence generation, catalog
// access, and the congruence verification sweeps.
//
// Exit codes: 0 success, 2 configuration/parse error, 3 resource cap,
// 4 soundness alarm (a congruence failed inside its guaranteed range).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctseq/congruences.hpp"
#include "ctseq/polytope.hpp"
#include "ctseq/sequences.hpp"

using namespace ctseq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;
constexpr int kExitAlarm = 4;

enum class OutputMode { Text, Json, Csv };

struct RunConfig {
    std::string vars;
    std::string poly;
    std::string q;
    std::string catalog_entry;
    std::string catalog_path;
    std::string primes = "3,5,7";
    std::string oracle_name;
    std::string gauss_source = "auto";
    std::uint64_t n = 10;
    std::uint64_t n_max = 40;
    std::uint64_t m_override = 0; // 0 = derive from the polytope
    int r_max = 2;
    std::int64_t k_lo = -1; // -1 = default range per prime
    std::int64_t k_hi = -1;
    int eps = 1;
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::uint64_t mod = 0; // 0 = exact
    std::size_t cap = kDefaultCandidateCap;
    bool json = false;
    bool csv = false;

    OutputMode mode() const {
        if (json) return OutputMode::Json;
        if (csv) return OutputMode::Csv;
        return OutputMode::Text;
    }
};

std::vector<std::uint64_t> parse_primes(const std::string& spec) {
    std::vector<std::uint64_t> primes;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        std::uint64_t lo = std::stoull(spec.substr(0, dots));
        std::uint64_t hi = std::stoull(spec.substr(dots + 2));
        for (std::uint64_t p = lo; p <= hi; ++p)
            if (is_prime(p)) primes.push_back(p);
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            std::uint64_t p = std::stoull(item);
            if (!is_prime(p))
                throw InvalidParametersError(std::to_string(p) + " is not prime");
            primes.push_back(p);
        }
    }
    if (primes.empty()) throw InvalidParametersError("no primes selected");
    return primes;
}

const std::vector<CatalogEntry>& load_catalog(const RunConfig& cfg) {
    if (cfg.catalog_path.empty()) return builtin_catalog();
    static std::vector<CatalogEntry> loaded;
    std::ifstream in(cfg.catalog_path);
    if (!in) throw InvalidParametersError("cannot open catalog file " + cfg.catalog_path);
    nlohmann::json doc;
    in >> doc;
    loaded = catalog_from_json(doc);
    return loaded;
}

struct Input {
    CTRep rep;
    ParseContext ctx;
    const CatalogEntry* entry = nullptr; // set when taken from a catalog
};

// The --q flag overrides a catalog entry's Q factor when present.
Input resolve_input(const RunConfig& cfg, bool use_q_flag = true) {
    if (!cfg.catalog_entry.empty()) {
        const auto& entries = load_catalog(cfg);
        const CatalogEntry* e = catalog_find(entries, cfg.catalog_entry);
        if (!e)
            throw InvalidParametersError("no catalog entry named '" + cfg.catalog_entry + "'");
        ParseContext ctx = e->context();
        CTRep rep = (use_q_flag && !cfg.q.empty()) ? CTRep(e->rep.P, parse(cfg.q, ctx)) : e->rep;
        return Input{std::move(rep), std::move(ctx), e};
    }
    if (cfg.poly.empty() || cfg.vars.empty())
        throw InvalidParametersError("provide --catalog-entry, or --vars with --poly");
    ParseContext ctx = ParseContext::from_comma_list(cfg.vars);
    CTRep rep(parse(cfg.poly, ctx),
              (use_q_flag && !cfg.q.empty())
                  ? parse(cfg.q, ctx)
                  : IntPolynomial::one(ctx.dimension(), IntegerRing{}));
    return Input{std::move(rep), std::move(ctx), nullptr};
}

void emit_json(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string csv_point(const ExponentVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

// ---------------------------------------------------------------- newton --

int cmd_newton(const RunConfig& cfg) {
    Input in = resolve_input(cfg);
    auto geom = SupportGeometry::of(in.rep.P);
    PolytopeReport report = minimal_M(geom, cfg.cap);
    switch (cfg.mode()) {
        case OutputMode::Json: {
            nlohmann::json j = to_json(report);
            j["support_size"] = geom.points.size();
            emit_json(j);
            break;
        }
        case OutputMode::Csv: {
            std::cout << "key,value\n";
            std::cout << "support_size," << geom.points.size() << "\n";
            std::cout << "contains_origin," << (report.origin_inside ? "true" : "false") << "\n";
            std::cout << "g_min," << (report.g_min ? report.g_min->str() : "") << "\n";
            std::cout << "m_min," << report.m_min << "\n";
            for (const auto& [v, g] : report.interior_points)
                std::cout << "interior_point," << csv_point(v) << " : " << g.str() << "\n";
            break;
        }
        case OutputMode::Text: {
            std::cout << "support points:  " << geom.points.size() << "\n";
            std::cout << "contains origin: " << (report.origin_inside ? "yes" : "no") << "\n";
            std::cout << "g_min:           " << (report.g_min ? report.g_min->str() : "none")
                      << "\n";
            std::cout << "m_min:           " << report.m_min << "\n";
            std::cout << "interior points at scale 1: " << report.interior_points.size() << "\n";
            for (const auto& [v, g] : report.interior_points)
                std::cout << "  (" << csv_point(v) << ")  g = " << g.str() << "\n";
            break;
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------ seq/oracle --

void emit_values(const RunConfig& cfg, const std::string& label,
                 const std::vector<std::string>& values, std::uint64_t first_index) {
    switch (cfg.mode()) {
        case OutputMode::Json: {
            nlohmann::json j;
            j["name"] = label;
            j["first_index"] = first_index;
            j["mod"] = cfg.mod ? nlohmann::json(cfg.mod) : nlohmann::json(nullptr);
            j["values"] = values;
            emit_json(j);
            break;
        }
        case OutputMode::Csv:
            std::cout << "n,value\n";
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << first_index + i << "," << values[i] << "\n";
            break;
        case OutputMode::Text:
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i) std::cout << " ";
                std::cout << values[i];
            }
            std::cout << "\n";
            break;
    }
}

int cmd_seq(const RunConfig& cfg) {
    Input in = resolve_input(cfg);
    std::vector<std::string> values;
    if (cfg.mod) {
        for (std::uint64_t r : ct_prefix(in.rep, cfg.n, ModRing(cfg.mod)))
            values.push_back(std::to_string(r));
    } else {
        for (const Integer& v : ct_prefix(in.rep, cfg.n, IntegerRing{}))
            values.push_back(v.str());
    }
    emit_values(cfg, in.entry ? in.entry->name : "sequence", values, 0);
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
    OracleSpec spec;
    spec.name = cfg.oracle_name;
    if (spec.name == "uab") spec.params = {{"eps", cfg.eps}, {"a", cfg.a}, {"b", cfg.b}};
    std::uint64_t first = spec.name == "w" ? 1 : 0;
    std::vector<std::string> values;
    for (std::uint64_t n = first; n <= cfg.n; ++n)
        values.push_back(spec.name == "w" ? oracle_w(n).str() : spec.eval(n).str());
    emit_values(cfg, spec.name, values, first);
    return kExitOk;
}

// ---------------------------------------------------------------- catalog --

int cmd_catalog(const RunConfig& cfg) {
    const auto& entries = load_catalog(cfg);
    switch (cfg.mode()) {
        case OutputMode::Json:
            emit_json(catalog_to_json(entries));
            break;
        case OutputMode::Csv:
            std::cout << "name,dim,documented_m,oracle,poly,q\n";
            for (const auto& e : entries)
                std::cout << e.name << "," << e.rep.dimension() << ","
                          << (e.documented_m ? std::to_string(*e.documented_m) : "") << ","
                          << (e.oracle ? e.oracle->name : "") << ",\"" << e.poly_src << "\",\""
                          << e.q_src << "\"\n";
            break;
        case OutputMode::Text:
            for (const auto& e : entries) {
                std::cout << e.name << "  (dim " << e.rep.dimension() << ", M = "
                          << (e.documented_m ? std::to_string(*e.documented_m) : "?")
                          << ", oracle " << (e.oracle ? e.oracle->name : "none") << ")\n";
                std::cout << "  P = " << e.poly_src << "\n";
                if (e.q_src != "1") std::cout << "  Q = " << e.q_src << "\n";
            }
            break;
    }
    return kExitOk;
}

// ----------------------------------------------------------------- verify --

void print_report_text(const CongruenceReport& r) {
    std::cout << "check " << r.check << "  p=" << r.prime;
    if (r.power != 1) std::cout << "^" << r.power;
    std::cout << "  n_max=" << r.n_max;
    if (r.m_used) std::cout << "  M=" << r.m_used;
    std::cout << "  guaranteed_k=" << r.guaranteed_k << "  observed_k=" << r.observed_k
              << (r.sound_alarm ? "  SOUNDNESS ALARM" : "") << "\n";
    for (const auto& v : r.verdicts) {
        if (v.pass && (!v.structural || *v.structural)) continue;
        std::cout << "  k=" << v.k << (v.pass ? "" : " FAIL");
        if (v.structural && !*v.structural) std::cout << " (structural factorization fails)";
        if (v.counterexample)
            std::cout << "  first at n=" << v.counterexample->n << ": " << v.counterexample->lhs
                      << " != " << v.counterexample->rhs;
        std::cout << "\n";
    }
}

void print_report_csv_rows(const CongruenceReport& r) {
    for (const auto& v : r.verdicts) {
        std::cout << r.check << "," << r.prime << "," << r.power << "," << r.n_max << ","
                  << r.m_used << "," << r.guaranteed_k << "," << r.observed_k << "," << v.k << ","
                  << (v.pass ? "true" : "false") << ",";
        if (v.structural) std::cout << (*v.structural ? "true" : "false");
        std::cout << ",";
        if (v.counterexample)
            std::cout << v.counterexample->n << "," << v.counterexample->lhs << ","
                      << v.counterexample->rhs;
        else
            std::cout << ",,";
        std::cout << "\n";
    }
}

int emit_reports(const RunConfig& cfg, const std::vector<CongruenceReport>& reports) {
    bool alarm = false;
    for (const auto& r : reports) alarm = alarm || r.sound_alarm;
    switch (cfg.mode()) {
        case OutputMode::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            emit_json(arr);
            break;
        }
        case OutputMode::Csv:
            std::cout << "check,prime,power,n_max,m_used,guaranteed_k,observed_k,k,pass,"
                         "structural_pass,ce_n,ce_lhs,ce_rhs\n";
            for (const auto& r : reports) print_report_csv_rows(r);
            break;
        case OutputMode::Text:
            for (const auto& r : reports) print_report_text(r);
            break;
    }
    return alarm ? kExitAlarm : kExitOk;
}

std::uint64_t digit_bound(const RunConfig& cfg, const CTRep& rep) {
    if (cfg.m_override) return cfg.m_override;
    return minimal_M(SupportGeometry::of(rep.P), cfg.cap).m_min;
}

int cmd_verify_lucas(const RunConfig& cfg) {
    Input in = resolve_input(cfg);
    std::uint64_t M = digit_bound(cfg, in.rep);
    std::vector<CongruenceReport> reports;
    for (std::uint64_t p : parse_primes(cfg.primes))
        reports.push_back(check_partial_lucas(in.rep, p, cfg.n_max, M));
    return emit_reports(cfg, reports);
}

int cmd_verify_digits(const RunConfig& cfg) {
    Input in = resolve_input(cfg);
    std::uint64_t M = digit_bound(cfg, in.rep);
    std::vector<CongruenceReport> reports;
    for (std::uint64_t p : parse_primes(cfg.primes))
        reports.push_back(check_digit_product(in.rep, p, M, cfg.n_max));
    return emit_reports(cfg, reports);
}

int cmd_verify_gauss(const RunConfig& cfg) {
    Input in = resolve_input(cfg);
    // Multivariate representations route through their exact oracle when one
    // is available: prefix expansion at index p^r * n_max is a memory cliff.
    bool use_oracle;
    if (cfg.gauss_source == "ct") {
        use_oracle = false;
    } else if (cfg.gauss_source == "oracle") {
        if (!in.entry || !in.entry->oracle)
            throw InvalidParametersError("--source oracle needs a catalog entry with an oracle");
        use_oracle = true;
    } else if (cfg.gauss_source == "auto") {
        use_oracle = in.rep.dimension() > 1 && in.entry && in.entry->oracle;
    } else {
        throw InvalidParametersError("--source must be auto, ct or oracle");
    }
    std::vector<CongruenceReport> reports;
    for (std::uint64_t p : parse_primes(cfg.primes)) {
        if (use_oracle) {
            const OracleSpec& spec = *in.entry->oracle;
            reports.push_back(check_gauss_exact(
                [&spec](std::uint64_t n) { return spec.eval(n); }, p, cfg.r_max, cfg.n_max));
        } else {
            reports.push_back(check_gauss(in.rep, p, cfg.r_max, cfg.n_max));
        }
    }
    return emit_reports(cfg, reports);
}

int cmd_verify_companion(const RunConfig& cfg) {
    Input in = resolve_input(cfg, /*use_q_flag=*/false);
    IntPolynomial companion = parse(cfg.q, in.ctx);
    std::vector<CongruenceReport> reports;
    for (std::uint64_t p : parse_primes(cfg.primes)) {
        std::uint64_t k_lo = cfg.k_lo >= 0 ? static_cast<std::uint64_t>(cfg.k_lo) : (p + 1) / 2;
        std::uint64_t k_hi = cfg.k_hi >= 0 ? static_cast<std::uint64_t>(cfg.k_hi) : p - 1;
        // The factorization theorem covers the interval entry with companion
        // 1 + x on the upper digit range.
        bool guaranteed = in.entry && in.entry->name == "u" && in.rep.dimension() == 1 &&
                          companion == parse("1+x", in.ctx) && k_lo >= (p + 1) / 2;
        reports.push_back(
            check_companion(in.rep, companion, p, k_lo, k_hi, cfg.n_max, guaranteed));
    }
    return emit_reports(cfg, reports);
}

int cmd_verify_lucasx(const RunConfig& cfg) {
    Input in = resolve_input(cfg);
    std::vector<CongruenceReport> reports;
    for (std::uint64_t p : parse_primes(cfg.primes))
        reports.push_back(check_lucasx_with_q(in.rep, p, cfg.n_max));
    return emit_reports(cfg, reports);
}

int cmd_verify_wolstenholme(const RunConfig& cfg) {
    std::vector<CongruenceReport> reports;
    for (std::uint64_t p : parse_primes(cfg.primes))
        reports.push_back(check_wolstenholme(cfg.eps, cfg.a, cfg.b, p));
    return emit_reports(cfg, reports);
}

int cmd_verify_frobenius(const RunConfig& cfg) {
    Input in = resolve_input(cfg);
    std::vector<CongruenceReport> reports;
    for (std::uint64_t p : parse_primes(cfg.primes)) {
        CongruenceReport r;
        r.check = "frobenius";
        r.prime = p;
        r.guaranteed_k = 1;
        Verdict v;
        v.k = 0;
        v.pass = frobenius_property_check(in.rep.P, p);
        if (!v.pass) r.sound_alarm = true;
        r.verdicts.push_back(v);
        r.observed_k = v.pass ? 1 : 0;
        reports.push_back(std::move(r));
    }
    return emit_reports(cfg, reports);
}

void add_common_output(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_flag("--json", cfg.json, "emit JSON");
    cmd->add_flag("--csv", cfg.csv, "emit CSV");
}

void add_rep_options(CLI::App* cmd, RunConfig& cfg, bool with_q) {
    cmd->add_option("--vars", cfg.vars, "comma-separated variable names");
    cmd->add_option("--poly", cfg.poly, "Laurent polynomial expression");
    if (with_q) cmd->add_option("--q", cfg.q, "Q factor (default 1)");
    cmd->add_option("--catalog-entry", cfg.catalog_entry, "named catalog entry");
    cmd->add_option("--catalog", cfg.catalog_path, "catalog JSON file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-term sequences, Newton-polytope digit bounds, and "
                 "congruence verification"};
    app.require_subcommand(1);
    RunConfig cfg;

    int (*selected)(const RunConfig&) = nullptr;
    auto select = [&selected](int (*fn)(const RunConfig&)) {
        return [&selected, fn]() { selected = fn; };
    };

    auto* newton = app.add_subcommand("newton", "Newton-polytope digit-bound analysis");
    add_rep_options(newton, cfg, false);
    newton->add_option("--cap", cfg.cap, "lattice-point enumeration cap");
    add_common_output(newton, cfg);
    newton->callback(select(cmd_newton));

    auto* seq = app.add_subcommand("seq", "print A(0..N) of a representation");
    add_rep_options(seq, cfg, true);
    seq->add_option("--n", cfg.n, "last index N")->required();
    seq->add_option("--mod", cfg.mod, "compute modulo m instead of exactly");
    add_common_output(seq, cfg);
    seq->callback(select(cmd_seq));

    auto* oracle = app.add_subcommand("oracle", "print binomial-sum oracle values");
    oracle->add_option("--name", cfg.oracle_name, "u | uab | w | apery | delannoy3")->required();
    oracle->add_option("--n", cfg.n, "last index N")->required();
    oracle->add_option("--eps", cfg.eps, "uab sign exponent");
    oracle->add_option("--a", cfg.a, "uab first binomial power");
    oracle->add_option("--b", cfg.b, "uab second binomial power");
    add_common_output(oracle, cfg);
    oracle->callback(select(cmd_oracle));

    auto* catalog = app.add_subcommand("catalog", "list catalog entries");
    catalog->add_option("--catalog", cfg.catalog_path, "catalog JSON file");
    add_common_output(catalog, cfg);
    catalog->callback(select(cmd_catalog));

    auto* verify = app.add_subcommand("verify", "run congruence sweeps");
    verify->require_subcommand(1);

    auto add_verify_common = [&](CLI::App* cmd, bool with_q) {
        add_rep_options(cmd, cfg, with_q);
        cmd->add_option("--primes", cfg.primes, "list 3,5,7 or range 3..19");
        cmd->add_option("--n-max", cfg.n_max, "largest n in the sweep");
        cmd->add_option("--cap", cfg.cap, "lattice-point enumeration cap");
        add_common_output(cmd, cfg);
    };

    auto* lucas = verify->add_subcommand("lucas", "A(pn+k) = A(n)A(k) mod p");
    add_verify_common(lucas, false);
    lucas->add_option("--m", cfg.m_override, "digit bound override (default: computed)");
    lucas->callback(select(cmd_verify_lucas));

    auto* digits = verify->add_subcommand("digits", "A(n) = prod A(n_j) over base-p digits");
    add_verify_common(digits, false);
    digits->add_option("--m", cfg.m_override, "digit bound override (default: computed)");
    digits->callback(select(cmd_verify_digits));

    auto* gauss = verify->add_subcommand("gauss", "A(p^r n) = A(p^(r-1) n) mod p^r");
    add_verify_common(gauss, false);
    gauss->add_option("--r-max", cfg.r_max, "largest power r");
    gauss->add_option("--source", cfg.gauss_source, "auto | ct | oracle");
    gauss->callback(select(cmd_verify_gauss));

    auto* companion = verify->add_subcommand(
        "companion", "A(pn+k) = ct[P^n Q_c] A(k) mod p on a digit range");
    add_verify_common(companion, true);
    companion->get_option("--q")->required();
    companion->add_option("--k-lo", cfg.k_lo, "first digit (default (p+1)/2)");
    companion->add_option("--k-hi", cfg.k_hi, "last digit (default p-1)");
    companion->callback(select(cmd_verify_companion));

    auto* lucasx = verify->add_subcommand("lucasx", "A(pn+k) = A(k)B(n) mod p with general Q");
    add_verify_common(lucasx, true);
    lucasx->callback(select(cmd_verify_lucasx));

    auto* wol = verify->add_subcommand("wolstenholme", "binomial-power sum at p modulo p^3");
    wol->add_option("--primes", cfg.primes, "list or range of primes >= 5");
    wol->add_option("--eps", cfg.eps, "sign exponent");
    wol->add_option("--a", cfg.a, "first binomial power");
    wol->add_option("--b", cfg.b, "second binomial power");
    add_common_output(wol, cfg);
    wol->callback(select(cmd_verify_wolstenholme));

    auto* frob = verify->add_subcommand("frobenius", "P^p = P(x^p) mod p");
    add_verify_common(frob, false);
    frob->callback(select(cmd_verify_frobenius));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        return selected(cfg);
    } catch (const CandidateExplosionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

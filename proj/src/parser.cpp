#include "ctseq/parser.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>

#include "ctseq/errors.hpp"

namespace ctseq {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    std::string text; // Number and Ident payload
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::End, start, ""};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Token::Number, start, src_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (is_ident_start(c)) {
            std::size_t j = i_;
            while (j < src_.size() && is_ident_char(src_[j])) ++j;
            tok_ = {Token::Ident, start, src_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        switch (c) {
            case '+': tok_ = {Token::Plus, start, "+"}; ++i_; return;
            case '-': tok_ = {Token::Minus, start, "-"}; ++i_; return;
            case '*':
                if (i_ + 1 < src_.size() && src_[i_ + 1] == '*') {
                    tok_ = {Token::Caret, start, "**"};
                    i_ += 2;
                } else {
                    tok_ = {Token::Star, start, "*"};
                    ++i_;
                }
                return;
            case '/': tok_ = {Token::Slash, start, "/"}; ++i_; return;
            case '^': tok_ = {Token::Caret, start, "^"}; ++i_; return;
            case '(': tok_ = {Token::LParen, start, "("}; ++i_; return;
            case ')': tok_ = {Token::RParen, start, ")"}; ++i_; return;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Token::End, 0, ""};
};

class Parser {
public:
    Parser(const std::string& src, const ParseContext& ctx) : lex_(src), ctx_(ctx) {}

    IntPolynomial run() {
        IntPolynomial p = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != Token::End)
            throw SyntaxError("unexpected token '" + t.text + "'", t.pos);
        return p;
    }

private:
    int dim() const { return ctx_.dimension(); }
    IntPolynomial zero() const { return IntPolynomial::zero(dim(), IntegerRing{}); }

    IntPolynomial parse_sum() {
        IntPolynomial acc = parse_product();
        for (;;) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Plus) {
                lex_.take();
                acc = acc + parse_product();
            } else if (k == Token::Minus) {
                lex_.take();
                acc = acc - parse_product();
            } else {
                return acc;
            }
        }
    }

    IntPolynomial parse_product() {
        IntPolynomial acc = parse_factor();
        for (;;) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Star) {
                lex_.take();
                acc = acc * parse_factor();
            } else if (k == Token::Slash) {
                Token slash = lex_.take();
                IntPolynomial divisor = parse_factor();
                acc = divide_by_monomial(acc, divisor, slash.pos);
            } else {
                return acc;
            }
        }
    }

    // factor = '-' factor | primary ['^' exponent]
    IntPolynomial parse_factor() {
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            return -parse_factor();
        }
        IntPolynomial base = parse_primary();
        if (lex_.peek().kind == Token::Caret) {
            Token caret = lex_.take();
            Integer e = parse_exponent();
            return apply_power(base, e, caret.pos);
        }
        return base;
    }

    // exponent = ['-'] Number ['^' exponent], right-associative
    Integer parse_exponent() {
        bool negate = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negate = true;
        }
        const Token& t = lex_.peek();
        if (t.kind != Token::Number)
            throw SyntaxError("expected integer exponent", t.pos);
        Token num = lex_.take();
        Integer value(num.text);
        if (lex_.peek().kind == Token::Caret) {
            Token caret = lex_.take();
            Integer inner = parse_exponent();
            if (inner.sign() < 0)
                throw SyntaxError("negative exponent inside an exponent chain", caret.pos);
            if (!inner.fits_int64() || inner.to_int64() > (1 << 20))
                throw SyntaxError("exponent too large", caret.pos);
            value = value.pow(static_cast<std::uint64_t>(inner.to_int64()));
        }
        return negate ? -value : value;
    }

    IntPolynomial parse_primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Number:
                return IntPolynomial::constant(dim(), IntegerRing{}, Integer(t.text));
            case Token::Ident: {
                int idx = ctx_.index_of(t.text);
                if (idx < 0)
                    throw UnknownVariableError("unknown variable '" + t.text + "'", t.pos);
                ExponentVec e(dim(), 0);
                e[idx] = 1;
                return IntPolynomial::monomial(dim(), IntegerRing{}, e, Integer(1));
            }
            case Token::LParen: {
                IntPolynomial inner = parse_sum();
                const Token& close = lex_.peek();
                if (close.kind != Token::RParen)
                    throw SyntaxError("expected ')'", close.pos);
                lex_.take();
                return inner;
            }
            case Token::End:
                throw SyntaxError("unexpected end of input", t.pos);
            default:
                throw SyntaxError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    IntPolynomial apply_power(const IntPolynomial& base, const Integer& e, std::size_t pos) {
        if (!e.fits_int64())
            throw SyntaxError("exponent too large", pos);
        std::int64_t n = e.to_int64();
        if (n >= 0) return base.pow(static_cast<std::uint64_t>(n));
        // P^-n = 1 / P^n, reusing the monomial-division rules.
        IntPolynomial denom = base.pow(static_cast<std::uint64_t>(-n));
        if (denom.term_count() != 1)
            throw NegativePowerOfPolynomialError(
                "negative power of a non-monomial polynomial", pos);
        return divide_by_monomial(IntPolynomial::one(dim(), IntegerRing{}), denom, pos);
    }

    // acc / divisor: divisor must be a single-term monomial whose coefficient
    // exactly divides every coefficient of acc.
    IntPolynomial divide_by_monomial(const IntPolynomial& acc, const IntPolynomial& divisor,
                                     std::size_t pos) {
        if (divisor.term_count() != 1)
            throw DivisionByNonMonomialError(
                divisor.is_zero() ? "division by zero" : "division by a non-monomial", pos);
        const auto& [de, dc] = *divisor.terms().begin();
        IntPolynomial r = zero();
        ExponentVec shifted(dim());
        for (const auto& [e, c] : acc.terms()) {
            if (!c.divisible_by(dc))
                throw InexactCoefficientDivisionError(
                    "coefficient " + c.str() + " not divisible by " + dc.str(), pos);
            for (int i = 0; i < dim(); ++i) shifted[i] = e[i] - de[i];
            r.set_coeff(shifted, c.divided_exactly_by(dc));
        }
        return r;
    }

    Lexer lex_;
    const ParseContext& ctx_;
};

template <class R>
std::string format_impl(const Polynomial<R>& p, const ParseContext& ctx,
                        bool (*is_neg)(const typename R::Elem&),
                        std::string (*magnitude)(const typename R::Elem&, const R&)) {
    if (static_cast<int>(ctx.dimension()) != p.dimension())
        throw ArityError("context dimension differs from polynomial dimension");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.sorted_terms()) {
        bool neg = is_neg(c);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mag = magnitude(c, p.ring());
        bool any_var = false;
        std::ostringstream vars;
        for (int i = 0; i < p.dimension(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            vars << ctx.names()[i];
            if (e[i] != 1) vars << "^" << e[i];
        }
        if (!any_var) {
            out << mag;
        } else if (mag == "1") {
            out << vars.str();
        } else {
            out << mag << "*" << vars.str();
        }
    }
    return out.str();
}

} // namespace

ParseContext::ParseContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidParametersError("variable list is empty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || !is_ident_start(n[0]))
            throw InvalidParametersError("invalid variable name '" + n + "'");
        for (char c : n)
            if (!is_ident_char(c))
                throw InvalidParametersError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second)
            throw InvalidParametersError("duplicate variable name '" + n + "'");
    }
}

ParseContext ParseContext::from_comma_list(const std::string& list) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : list) {
        if (c == ',') {
            names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    names.push_back(cur);
    return ParseContext(std::move(names));
}

ParseContext ParseContext::default_names(int dimension) {
    if (dimension <= 3) {
        std::vector<std::string> names = {"x", "y", "z"};
        names.resize(static_cast<std::size_t>(dimension < 1 ? 1 : dimension));
        return ParseContext(std::move(names));
    }
    std::vector<std::string> names;
    for (int i = 1; i <= dimension; ++i) names.push_back("x" + std::to_string(i));
    return ParseContext(std::move(names));
}

int ParseContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

IntPolynomial parse(const std::string& src, const ParseContext& ctx) {
    return Parser(src, ctx).run();
}

std::string format(const IntPolynomial& p, const ParseContext& ctx) {
    return format_impl<IntegerRing>(
        p, ctx, [](const Integer& c) { return c.sign() < 0; },
        [](const Integer& c, const IntegerRing&) { return c.abs().str(); });
}

std::string format(const ModPolynomial& p, const ParseContext& ctx) {
    // Residues are canonical in [0, m); no negative rendering.
    return format_impl<ModRing>(
        p, ctx, [](const std::uint64_t&) { return false; },
        [](const std::uint64_t& c, const ModRing&) { return std::to_string(c); });
}

} // namespace ctseq

#ifndef CTSEQ_PARSER_HPP
#define CTSEQ_PARSER_HPP

#include <string>
#include <vector>

#include "ctseq/laurent.hpp"

namespace ctseq {

/// Ordered variable names; defines the dimension and coordinate order of
/// parsed polynomials. Names must be distinct identifiers.
class ParseContext {
public:
    explicit ParseContext(std::vector<std::string> names);

    /// "x,y,z" -> context with three variables.
    static ParseContext from_comma_list(const std::string& list);

    /// Default names for a given dimension: x | x,y | x,y,z | x1..xd.
    static ParseContext default_names(int dimension);

    int dimension() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a variable name, or -1.
    int index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
};

/// Parses an expression (operators + - * / ^, parentheses, explicit `*`,
/// monomial-only division) into a Laurent polynomial over the integers.
IntPolynomial parse(const std::string& src, const ParseContext& ctx);

/// Canonical text form: descending-lex terms, explicit `*` and `^`,
/// negative exponents as `x^-1`; the zero polynomial is "0".
std::string format(const IntPolynomial& p, const ParseContext& ctx);
std::string format(const ModPolynomial& p, const ParseContext& ctx);

} // namespace ctseq

#endif

#ifndef CTSEQ_ERRORS_HPP
#define CTSEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctseq {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Modulus outside [2, 2^63).
class InvalidModulusError : public Error {
public:
    explicit InvalidModulusError(const std::string& what) : Error(what) {}
};

/// Arithmetic between residues with different moduli.
class ModulusMismatchError : public Error {
public:
    explicit ModulusMismatchError(const std::string& what) : Error(what) {}
};

/// Binary polynomial operation with mismatched dimension or ring.
class ArityError : public Error {
public:
    explicit ArityError(const std::string& what) : Error(what) {}
};

/// degree() of the zero polynomial.
class DegreeOfZeroError : public Error {
public:
    explicit DegreeOfZeroError(const std::string& what) : Error(what) {}
};

class EmptySupportError : public Error {
public:
    explicit EmptySupportError(const std::string& what) : Error(what) {}
};

/// Lattice-point enumeration would exceed the configured cap.
class CandidateExplosionError : public Error {
public:
    CandidateExplosionError(const std::string& what, std::size_t required, std::size_t cap)
        : Error(what), required(required), cap(cap) {}
    std::size_t required;
    std::size_t cap;
};

class InvalidParametersError : public Error {
public:
    explicit InvalidParametersError(const std::string& what) : Error(what) {}
};

/// (eps, a, b) triple for which the prime-cube congruence is known to fail.
class ExcludedParameterTripleError : public Error {
public:
    explicit ExcludedParameterTripleError(const std::string& what) : Error(what) {}
};

class ModulusTooLargeError : public Error {
public:
    explicit ModulusTooLargeError(const std::string& what) : Error(what) {}
};

/// Parse errors carry the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(const std::string& what, std::size_t position) : ParseError(what, position) {}
};

class UnknownVariableError : public ParseError {
public:
    UnknownVariableError(const std::string& what, std::size_t position)
        : ParseError(what, position) {}
};

class DivisionByNonMonomialError : public ParseError {
public:
    DivisionByNonMonomialError(const std::string& what, std::size_t position)
        : ParseError(what, position) {}
};

class InexactCoefficientDivisionError : public ParseError {
public:
    InexactCoefficientDivisionError(const std::string& what, std::size_t position)
        : ParseError(what, position) {}
};

class NegativePowerOfPolynomialError : public ParseError {
public:
    NegativePowerOfPolynomialError(const std::string& what, std::size_t position)
        : ParseError(what, position) {}
};

} // namespace ctseq

#endif

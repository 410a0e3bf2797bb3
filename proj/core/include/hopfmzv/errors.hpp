#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfmzv {

/// Base of every error raised by the library. Each subclass maps to one
/// CLI exit code (see tools/cli/commands.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (zero part, word not ending in x1,
/// I applied to the unit, rank mismatch, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Comparison of compositions of different weights.
class ComparisonError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A character table is consulted beyond its weight horizon.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// Inverting Ψ_χ where χ([s]) = 0.
class SingularityError : public Error {
public:
    SingularityError(unsigned part, const std::string& what)
        : Error(what), part_(part) {}
    unsigned part() const noexcept { return part_; }

private:
    unsigned part_;
};

/// Numeric evaluation of a non-admissible (divergent) composition.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input: expressions, fractions, compositions.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Character file rejected at ingestion (unreadable, incomplete, or failing
/// multiplicativity).
class CharacterError : public Error {
public:
    using Error::Error;
};

} // namespace hopfmzv

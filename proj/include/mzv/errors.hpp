#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// Precondition violation at the mathematical level (inversion of zero,
// J not a subset of Sigma, exponent out of range, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (array grammar, CLI payloads).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A substitution made a denominator vanish identically.
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested result is not determined by the tracked coefficients.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No certified truncation point could be established for a series.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant broke; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mzv

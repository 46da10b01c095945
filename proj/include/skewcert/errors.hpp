#pragma once

#include <stdexcept>
#include <string>

namespace skewcert {

/// Operands live in incompatible spaces (ambient dimension or modulus differs).
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exterior-algebra operation required a grade the vector does not have.
struct GradeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A threshold parameter t is out of range for the given ell.
struct InvalidThreshold : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A randomized draw failed verification more times than the retry budget
/// allows. Usually means the prime is too small for the requested structure.
struct SamplingExhausted : std::runtime_error {
    explicit SamplingExhausted(const std::string& what, std::string last_failure = {})
        : std::runtime_error(what), last_failed_property(std::move(last_failure)) {}

    std::string last_failed_property;
};

/// Input file could not be parsed into a family; carries the offending cell.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, int row = 0, int col = 0)
        : std::runtime_error(what), row(row), col(col) {}

    int row;  // 1-based, 0 when not cell-specific
    int col;
};

}  // namespace skewcert

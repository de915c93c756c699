#pragma once

#include <stdexcept>
#include <string>

namespace spdmanova {

// Caller violated a precondition (bad arguments, mismatched dimensions).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A numeric computation failed (eigensolver breakdown, non-SPD input, ...).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Scatter matrix too ill-conditioned for a meaningful determinant ratio.
struct SingularScatterError : NumericError {
    explicit SingularScatterError(const std::string& what) : NumericError(what) {}
};

// A group's variance of squared distances collapsed to ~0.
struct DegenerateVarianceError : NumericError {
    explicit DegenerateVarianceError(const std::string& what) : NumericError(what) {}
};

// Input file malformed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spdmanova

#pragma once

#include <stdexcept>
#include <string>

namespace puiseux {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct MismatchedRadicand : Error {
    using Error::Error;
};

struct NotAdmissible : Error {
    using Error::Error;
};

struct UnsupportedDimension : Error {
    using Error::Error;
};

struct NotLineFree : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

struct ZeroRoot : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct NoCompatiblePath : Error {
    using Error::Error;
};

// Raised when an edge polynomial has roots outside Q. Carries the factor
// whose roots could not be found, printed in the message.
struct NonRationalRoots : Error {
    explicit NonRationalRoots(const std::string& cofactor_text)
        : Error("no full set of rational roots; irrational cofactor " + cofactor_text),
          cofactor(cofactor_text) {}
    std::string cofactor;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct UnknownVariable : Error {
    using Error::Error;
};

}  // namespace puiseux

#pragma once

#include <stdexcept>
#include <string>

namespace telheat {

// Base of the library's error hierarchy. Everything thrown on a numeric or
// contract violation derives from this, so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma evaluated at a nonpositive integer.
struct PoleError : Error {
    using Error::Error;
};

// A series argument outside the reachable convergence region.
struct DivergenceError : Error {
    using Error::Error;
};

// Parameter combination for which the chosen representation degenerates
// (logarithmic connection cases, zero denominators, unsupported dispatch).
struct ParameterError : Error {
    using Error::Error;
};

// Function not defined for the requested order/degree range.
struct UndefinedError : Error {
    using Error::Error;
};

// Profile unbounded at a support endpoint.
struct ExponentError : Error {
    using Error::Error;
};

// Scaling exponents inconsistent with the similarity reduction.
struct UniversalityError : Error {
    using Error::Error;
};

// Discriminant of an order formula is negative.
struct ComplexOrderError : Error {
    using Error::Error;
};

// Evaluation requested on or inside a singular band.
struct SingularityError : Error {
    using Error::Error;
};

// Profile not integrable over its support.
struct NonIntegrableError : Error {
    using Error::Error;
};

// No valid samples in the requested domain.
struct EmptyDomainError : Error {
    using Error::Error;
};

// An audit precondition does not hold (e.g. conservation needs alpha = 1).
struct PreconditionError : Error {
    using Error::Error;
};

// Initial data not smooth enough at the support edge for the scheme.
struct SmoothnessError : Error {
    using Error::Error;
};

// Time step violates the stability bound.
struct CFLError : Error {
    using Error::Error;
};

// Evolution amplitude exploded.
struct BlowupError : Error {
    using Error::Error;
};

// Bad run configuration (unknown key, malformed value, missing file).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace telheat

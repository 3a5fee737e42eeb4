#pragma once

#include <stdexcept>
#include <string>

namespace biquad {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown letters in a word, non-finite
// coefficients, and similar schema violations.
struct InputError : Error {
    using Error::Error;
};

// Bad run configuration (grid too small, nonpositive sample count, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Numeric argument outside its admissible range, e.g. an anticommutation
// coordinate outside [-1, 1].
struct DomainError : Error {
    using Error::Error;
};

// Request that is undefined for the given parameter region, e.g. asking for
// the interior optimizer data of a tilted family that peaks on the boundary.
struct RegionError : Error {
    using Error::Error;
};

// A checked internal contract failed (non-Hermitian matrix where a Hermitian
// one is required, eigensolver fed garbage, ...).
struct ContractError : Error {
    using Error::Error;
};

} // namespace biquad

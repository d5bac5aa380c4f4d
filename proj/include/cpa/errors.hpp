#pragma once

#include <stdexcept>
#include <string>

namespace cpa {

// Base for every error this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be parsed (permutations, pattern sets, JSON).
struct ParseError : Error {
    using Error::Error;
};

// reduce() was handed repeated values.
struct DuplicateEntries : ParseError {
    using ParseError::ParseError;
};

// Pattern set contains a pattern consecutively contained in another,
// or a pattern shorter than 2.
struct PatternRedundancy : ParseError {
    using ParseError::ParseError;
};

// Enumeration or brute-force size limit exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

// Exact polynomial division requested where the denominator does not
// divide the numerator.  Seeing this from tail-FE evaluation means the
// equation was constructed wrong.
struct NonDivisible : Error {
    using Error::Error;
};

// Geometric-series split requested for the empty monomial (base 1).
struct DegenerateBase : Error {
    using Error::Error;
};

} // namespace cpa

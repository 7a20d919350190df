#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permbin {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// make_field was given a characteristic that is not prime.
struct CompositeCharacteristic : Error {
    using Error::Error;
};

/// Requested field order exceeds the supported bounds.
struct FieldTooLarge : Error {
    using Error::Error;
};

/// Multiplicative inverse of zero.
struct DivisionByZero : Error {
    using Error::Error;
};

/// Arguments outside an operation's stated domain.
struct BadParameters : Error {
    using Error::Error;
};

/// canonicalize_k called on a binomial that fails the degree-gcd filter.
struct NotCoprimeFilter : Error {
    using Error::Error;
};

/// normalize_n called with gcd(n, d) != 1.
struct HypothesisViolated : Error {
    using Error::Error;
};

/// No candidate exponent produced a nonzero top coefficient.
struct RefutationFailed : Error {
    using Error::Error;
};

/// Expression parse failure; `offset` is the byte position in the input.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

}  // namespace permbin

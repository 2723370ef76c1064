#pragma once

#include <stdexcept>
#include <string>

namespace betticone {

// A support query (leading exponent, pure type, ...) hit a zero polynomial
// or zero diagram.
struct EmptySupportError : std::domain_error {
    using std::domain_error::domain_error;
};

// The pair (A,B) has a negative coefficient or fails the defining equation
// B * xi_p(t^m) = A * xi_q(t^m).
struct NotInConeError : std::domain_error {
    using std::domain_error::domain_error;
};

// A triple handed to the realization pipeline violates its structural
// preconditions (HK equations, purity, 0/1 end coefficients).
struct MalformedTripleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A random scalar choice turned out degenerate (kernel dimension off, zero
// boundary coordinate, vanishing witness minor). Retry with a fresh seed.
struct DegenerateChoiceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// realize() ran out of retries.
struct RealizationFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant that valid inputs cannot break was broken anyway.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace betticone

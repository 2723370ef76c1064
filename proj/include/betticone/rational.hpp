#pragma once

#include <gmpxx.h>

#include <string>

namespace betticone {

// All arithmetic in this library is exact. Coefficients live in Q, sizes
// stay small, but minors of seeded integer matrices overflow 64 bits fast,
// so everything runs on GMP.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (optional leading minus), canonicalized.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// Exact inverse of rational_from_string: "p/q", or "p" when q == 1.
std::string rational_to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace betticone

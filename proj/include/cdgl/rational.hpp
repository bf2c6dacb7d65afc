#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdgl {

// Exact rationals are GMP's mpq_class; values are kept canonical (reduced,
// positive denominator) by every operation we use.
using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// p/q in canonical form (mpq_class(p, q) alone does not reduce).
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace cdgl

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tsg {

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (surrounding whitespace allowed). Throws
/// Error(MalformedInput) on bad syntax or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Nearest rational with denominator at most `max_den` (continued fractions).
Rational best_rational_approximation(double value, std::int64_t max_den);

}  // namespace tsg

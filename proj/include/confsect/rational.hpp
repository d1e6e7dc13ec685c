#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace confsect {

// Exact rational used for every edge parameter and distance.
using Rational = mpq_class;

// Accepts "p/q", integers, and finite decimals ("0.25").
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Canonical p/q; mpq_class(p, q) alone is not reduced.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

}  // namespace confsect

#pragma once

#include <gmpxx.h>

#include <string>

namespace gjps {

// All coefficient arithmetic is exact. No floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(num, den) does not reduce; GMP comparisons need canonical form.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a" or "a/b" (optionally signed). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

// Canonical form: "a" when the denominator is 1, else "a/b".
std::string rational_to_string(const Rational& q);

}  // namespace gjps

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jslope {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced fraction text, e.g. "37/8", "-5", "0".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "a", "-a", "a/b" (whitespace-trimmed). Throws ParseError.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational abs(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
long lcm(long a, long b);

}  // namespace jslope

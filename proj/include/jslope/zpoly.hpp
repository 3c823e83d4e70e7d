#pragma once

#include <string>
#include <vector>

#include "jslope/number.hpp"

namespace jslope {

/// Dense polynomial in z with rational coefficients, lowest degree first.
/// Trailing zero coefficients are never stored.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Rational> coeffs);
  ZPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ZPoly(long constant) : ZPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static ZPoly monomial(const Rational& c, int power);
  /// 1 - z^d
  static ZPoly one_minus_power(int d);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational operator[](int k) const;
  Rational leading() const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const ZPoly& o);
  ZPoly& operator*=(const Rational& s);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(ZPoly a, const ZPoly& b) { return a *= b; }
  friend ZPoly operator*(ZPoly a, const Rational& s) { return a *= s; }
  friend ZPoly operator-(ZPoly a) { return a *= Rational(-1); }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  ZPoly pow(int e) const;
  /// Keeps the terms of degree < n.
  ZPoly truncated(int n) const;

  /// Human-readable form such as "-1 + 36z - 11z^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  ZPoly quotient;
  ZPoly remainder;
};

/// Euclidean division; throws DomainError on division by zero.
DivMod divmod(const ZPoly& a, const ZPoly& b);

/// Monic greatest common divisor.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Inverse of a modulo m (requires gcd(a, m) = 1); throws DomainError otherwise.
ZPoly inverse_mod(const ZPoly& a, const ZPoly& m);

/// The d-th cyclotomic polynomial, from z^d - 1 = prod over k | d of Phi_k.
const ZPoly& cyclotomic(int d);

/// First n power-series coefficients of num/den; den(0) must be nonzero.
std::vector<Rational> series(const ZPoly& num, const ZPoly& den, int n);

}  // namespace jslope

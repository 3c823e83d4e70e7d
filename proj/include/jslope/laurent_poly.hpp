#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "jslope/number.hpp"

namespace jslope {

/// Sparse Laurent polynomial in q with integer coefficients.
///
/// Exponents are stored in quarter units: the key k stands for q^(k/4). This
/// covers the q^(1/4) and q^(1/2) factors that appear in torus-knot sums while
/// keeping keys exact and totally ordered. Zero coefficients are never stored,
/// so the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using Key = std::int64_t;
  using Terms = std::map<Key, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Integer& constant);
  explicit LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

  /// c * q^(quarter_exponent / 4)
  static LaurentPoly monomial(const Integer& c, Key quarter_exponent);
  /// c * q^e for an integral exponent e
  static LaurentPoly q_power(Key e, const Integer& c = 1) { return monomial(c, 4 * e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient at quarter-unit key; zero when absent.
  Integer coefficient(Key quarter_exponent) const;
  /// Adds c * q^(key/4) in place, pruning zeros.
  void add_term(Key quarter_exponent, const Integer& c);

  /// True iff every exponent is an integer.
  bool is_integral() const;

  /// Highest/lowest exponent as an exact rational. Throws DomainError on zero.
  Rational deg() const;
  Rational mindeg() const;
  Key max_key() const;
  Key min_key() const;

  /// q -> q^-1
  LaurentPoly mirror() const;
  /// Multiplies by q^(quarter_shift/4).
  LaurentPoly shifted(Key quarter_shift) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Canonical text: ascending exponents, "-q^-6 + 2q^-5 - ... - q^6". Zero is "0".
  std::string to_string() const;
  /// Inverse of to_string; tolerates arbitrary whitespace. Throws ParseError.
  static LaurentPoly parse(std::string_view text);

 private:
  Terms terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);
inline LaurentPoly mirror(const LaurentPoly& f) { return f.mirror(); }
inline Rational deg(const LaurentPoly& f) { return f.deg(); }
inline Rational mindeg(const LaurentPoly& f) { return f.mindeg(); }

}  // namespace jslope

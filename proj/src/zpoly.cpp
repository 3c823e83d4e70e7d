#include "jslope/zpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "jslope/error.hpp"

namespace jslope {

ZPoly::ZPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

ZPoly ZPoly::monomial(const Rational& c, int power) {
  if (power < 0) throw DomainError("negative power in polynomial monomial");
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::one_minus_power(int d) { return ZPoly(1) - monomial(1, d); }

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational ZPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Rational ZPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const ZPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

ZPoly ZPoly::pow(int e) const {
  ZPoly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

ZPoly ZPoly::truncated(int n) const {
  if (n >= static_cast<int>(c_.size())) return *this;
  return ZPoly(std::vector<Rational>(c_.begin(), c_.begin() + std::max(n, 0)));
}

std::string ZPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational mag = c_[k] < 0 ? Rational(-c_[k]) : c_[k];
    if (first) {
      if (c_[k] < 0) out << '-';
    } else {
      out << (c_[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << jslope::to_string(mag);
    if (k >= 1) out << 'z';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

DivMod divmod(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {ZPoly(), a};
  std::vector<Rational> q(dq + 1);
  Rational lead = b.leading();
  for (int k = dq; k >= 0; --k) {
    Rational f = rem[k + db] / lead;
    q[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  return {ZPoly(std::move(q)), ZPoly(std::move(rem))};
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = a;
  ZPoly y = b;
  while (!y.is_zero()) {
    ZPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * Rational(1 / x.leading());
}

ZPoly inverse_mod(const ZPoly& a, const ZPoly& m) {
  // extended Euclid tracking the coefficient of a
  ZPoly r0 = m;
  ZPoly r1 = divmod(a, m).remainder;
  ZPoly s0;
  ZPoly s1(1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    ZPoly s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw DomainError("polynomial is not invertible modulo the given factor");
  return divmod(s0 * Rational(1 / r0.leading()), m).remainder;
}

const ZPoly& cyclotomic(int d) {
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, ZPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // z^d - 1 divided by the cyclotomic factors of the proper divisors
  ZPoly num = ZPoly::monomial(1, d) - ZPoly(1);
  for (int k = 1; k < d; ++k) {
    if (d % k != 0) continue;
    auto pk = cache.find(k);
    ZPoly phi;
    if (pk == cache.end()) {
      // compute recursively without holding duplicate work; small d keeps this cheap
      ZPoly sub = ZPoly::monomial(1, k) - ZPoly(1);
      for (int j = 1; j < k; ++j) {
        if (k % j == 0) sub = divmod(sub, cache.at(j)).quotient;
      }
      phi = cache.emplace(k, sub).first->second;
    } else {
      phi = pk->second;
    }
    num = divmod(num, phi).quotient;
  }
  return cache.emplace(d, num).first->second;
}

std::vector<Rational> series(const ZPoly& num, const ZPoly& den, int n) {
  if (den[0] == 0) throw DomainError("power series of a fraction whose denominator vanishes at 0");
  std::vector<Rational> out(std::max(n, 0));
  Rational inv = 1 / den[0];
  for (int k = 0; k < n; ++k) {
    Rational acc = num[k];
    for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den.coeffs()[j] * out[k - j];
    out[k] = acc * inv;
  }
  return out;
}

}  // namespace jslope

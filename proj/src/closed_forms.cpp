#include "jslope/closed_forms.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "jslope/colored_jones.hpp"
#include "jslope/error.hpp"

namespace jslope {

namespace {

void require_odd(long p) {
  if (p % 2 == 0) throw DomainError("pretzel parameter p must be odd, got " + std::to_string(p));
}

ZPoly geometric(int m) {
  std::vector<Rational> v(m, Rational(1));
  return ZPoly(v);
}

// generating function of the third difference of delta (p > 0) or delta* (p < 0)
std::pair<ZPoly, ZPoly> third_difference_gf(long p) {
  if (p >= 7) {
    ZPoly num = ZPoly::monomial(1, static_cast<int>(p - 7)) * ZPoly::one_minus_power(1);
    return {num, ZPoly::one_minus_power(static_cast<int>(p - 3))};
  }
  if (p == 5) return {ZPoly(-3), ZPoly(std::vector<Rational>{1, 1})};
  if (p == 3) return {ZPoly(-2), ZPoly(std::vector<Rational>{1, 1})};
  if (p == 1 || p == -1) return {ZPoly(), ZPoly(1)};
  if (p == -3) {
    ZPoly num(std::vector<Rational>{-4, -4, -3, -1});
    return {num, geometric(3).pow(2)};
  }
  int m = static_cast<int>(-p);
  ZPoly num = ZPoly::monomial(1, m - 4) - ZPoly::monomial(2, m - 3);
  for (int k = m - 2; k <= 2 * m - 4; ++k) num -= ZPoly::monomial(1, k);
  return {num, geometric(m).pow(2)};
}

struct Seeds {
  Integer v1, v2;
};

// the two first colors of the degree the family formula leaves open
Seeds engine_seeds(long p) {
  static std::mutex mu;
  static std::map<long, Seeds> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  PdCode pd = pretzel_pd({-2, 3, p});
  LaurentPoly j1 = bracket_colored_jones(pd, 1);
  LaurentPoly j2 = bracket_colored_jones(pd, 2);
  // the other degree has a closed form; it pins the chirality of the diagram
  Rational known = p > 0 ? make_rational(p + 3, 2) : make_rational(p + 13, 2);
  Rational got = p > 0 ? j1.mindeg() : j1.deg();
  if (got != known) {
    throw InternalError("pretzel diagram for p=" + std::to_string(p) + " has the wrong chirality (degree " +
                        to_string(got) + ", expected " + to_string(known) + ")");
  }
  Rational a = p > 0 ? j1.deg() : j1.mindeg();
  Rational b = p > 0 ? j2.deg() : j2.mindeg();
  Seeds s{a.get_num(), b.get_num()};
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(p, s);
  return s;
}

std::vector<Integer> generated_sequence(long p, int len) {
  auto [num, den] = third_difference_gf(p);
  Seeds s = engine_seeds(p);
  std::vector<Rational> d3 = series(num, den, std::max(len, 3));
  std::vector<Integer> out(std::max(len, 3));
  Integer d1 = s.v1;
  Integer d2 = s.v2 - 2 * s.v1;
  out[0] = 0;
  for (int n = 0; n + 1 < static_cast<int>(out.size()); ++n) {
    if (!is_integer(d3[n])) throw InternalError("non-integral third difference in pretzel family");
    out[n + 1] = out[n] + d1;
    d1 += d2;
    d2 += d3[n].get_num();
  }
  out.resize(len);
  return out;
}

std::vector<Integer> linear_sequence(long p, int len) {
  std::vector<Integer> out(len);
  for (int n = 0; n < len; ++n) {
    Integer nn = n;
    out[n] = p > 0 ? Integer(nn * (p + 3) / 2) : Integer(nn * (5 * nn + p + 8) / 2);
  }
  return out;
}

int sample_length(long p) {
  long period = std::max(2L, std::labs(p - 3));
  period = std::max(period, std::labs(p));
  return static_cast<int>(4 * period + 16);
}

}  // namespace

AlternatingInvariants invariants_of(const AlternatingData& data) {
  validate(data);
  AlternatingInvariants inv;
  inv.c_plus = data.c_plus;
  inv.c_minus = data.c_minus;
  inv.c = data.c_plus + data.c_minus;
  inv.w = data.c_plus - data.c_minus;
  inv.sigma = data.a_circles - 1 - data.c_plus;
  return inv;
}

DegreePair alt_degrees(const AlternatingData& data, long n) {
  validate(data);
  Rational nn(n);
  long c = data.c_plus + data.c_minus;
  long w = data.c_plus - data.c_minus;
  Rational d = make_rational(c + w, 4) * nn * nn + make_rational(-data.a_circles + 2 * data.c_plus + 1, 2) * nn;
  Rational ds = make_rational(-c + w, 4) * nn * nn + make_rational(data.b_circles - 2 * data.c_minus - 1, 2) * nn;
  return {d, ds};
}

SymmetrizedPair alt_symmetrized(const AlternatingInvariants& inv, long n) {
  Rational nn(n);
  Rational dm = make_rational(inv.w, 2) * nn * nn + make_rational(inv.w - 2 * inv.sigma, 2) * nn;
  Rational dp = make_rational(inv.c, 2) * (nn * nn + nn);
  return {dm, dp};
}

AlternatingInvariants recover_invariants(long dm1, long dm2, long dp1) {
  AlternatingInvariants inv;
  inv.c = dp1;
  inv.sigma = -3 * dm1 + dm2;
  inv.w = -2 * dm1 + dm2;
  if ((inv.c + inv.w) % 2 != 0) throw DomainError("crossing number and writhe must have equal parity");
  inv.c_plus = (inv.c + inv.w) / 2;
  inv.c_minus = (inv.c - inv.w) / 2;
  return inv;
}

DegreePair torus_degrees(long a, long b, long n) {
  bool mirrored = (a < 0) != (b < 0);
  a = std::labs(a);
  b = std::labs(b);
  if (a < 2 || b < 2 || std::gcd(a, b) != 1) throw DomainError("torus knot needs coprime a,b >= 2");
  Rational nn(n);
  Rational d = make_rational(a * b, 4) * nn * nn + make_rational(a * b - 1, 2) * nn;
  if (n % 2 != 0) d -= make_rational((a - 2) * (b - 2), 4);
  Rational ds = make_rational((a - 1) * (b - 1), 2) * nn;
  if (mirrored) return {-ds, -d};
  return {d, ds};
}

const PretzelForm& pretzel_form(long p) {
  require_odd(p);
  static std::mutex mu;
  static std::map<long, PretzelForm> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  int len = sample_length(p);
  PretzelForm f;
  f.p = p;
  if (p > 0) {
    f.delta_values = generated_sequence(p, len);
    f.delta_star_values = linear_sequence(p, len);
  } else {
    f.delta_values = linear_sequence(p, len);
    f.delta_star_values = generated_sequence(p, len);
  }
  FitOptions opt;
  opt.max_period = std::max(32, len / 4);
  f.delta = fit(f.delta_values, opt).qp;
  f.delta_star = fit(f.delta_star_values, opt).qp;
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(p, std::move(f)).first->second;
}

DegreePair pretzel_degrees(long p, long n) {
  if (n < 0) throw DomainError("color must be non-negative");
  const PretzelForm& f = pretzel_form(p);
  return {f.delta.evaluate(n), f.delta_star.evaluate(n)};
}

std::vector<Integer> pretzel_sequence(long p, bool max_degree, int N) {
  if (N < 0) throw DomainError("color must be non-negative");
  const PretzelForm& f = pretzel_form(p);
  const auto& cached = max_degree ? f.delta_values : f.delta_star_values;
  if (N < static_cast<int>(cached.size())) return {cached.begin(), cached.begin() + N + 1};
  bool generated = (p > 0) == max_degree;
  return generated ? generated_sequence(p, N + 1) : linear_sequence(p, N + 1);
}

PretzelSlopes pretzel_slopes(long p) {
  require_odd(p);
  PretzelSlopes s;
  if (p >= 5) {
    s.period = static_cast<int>(p - 3);
    s.js = make_rational(p * p - p - 5, p - 3);
    s.js_star = 0;
  } else if (p == 3) {
    s.period = 2;
    s.js = 6;
    s.js_star = 0;
  } else {
    s.period = static_cast<int>(std::labs(p));
    s.js = 5;
    s.js_star = make_rational((p + 1) * (p + 1), p);
  }
  return s;
}

SlopeSet pretzel_boundary_slopes(long p) {
  require_odd(p);
  if (p >= 7) {
    return {Rational(0), Rational(16), make_rational(2 * (p * p - p - 5), p - 3), Rational(2 * (3 + p))};
  }
  if (p <= -1) {
    return {Rational(0), Rational(10), make_rational(2 * (p + 1) * (p + 1), p), Rational(2 * (p + 3))};
  }
  throw DomainError("the boundary slope formula covers p >= 7 and p <= -1 only, got p=" + std::to_string(p));
}

}  // namespace jslope

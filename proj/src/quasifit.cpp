#include "jslope/quasifit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "jslope/error.hpp"

namespace jslope {

namespace {

const ZPoly& factor_poly(int d) {
  static const ZPoly one_minus_z = ZPoly::one_minus_power(1);
  return d == 1 ? one_minus_z : cyclotomic(d);
}

FactorMap factors_of_one_minus_power(int pi, int multiplicity) {
  FactorMap f;
  for (int d = 1; d <= pi; ++d) {
    if (pi % d == 0) f[d] += multiplicity;
  }
  return f;
}

std::vector<Rational> to_rationals(const std::vector<Integer>& seq) {
  std::vector<Rational> out;
  out.reserve(seq.size());
  for (const auto& x : seq) out.emplace_back(x);
  return out;
}

std::vector<Rational> rdifference(std::vector<Rational> s, int k) {
  for (int step = 0; step < k; ++step) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = s[i + 1] - s[i];
    s.pop_back();
  }
  return s;
}

template <class T>
std::optional<PeriodInfo> find_period(const std::vector<T>& seq, int max_period, int max_transient, int min_periods) {
  const int len = static_cast<int>(seq.size());
  for (int t = 0; t <= max_transient; ++t) {
    for (int p = 1; p <= max_period; ++p) {
      if (len - t < min_periods * p + 3) break;
      bool ok = true;
      for (int n = t; n + p < len && ok; ++n) ok = seq[n + p] == seq[n];
      if (ok) return PeriodInfo{p, t};
    }
  }
  return std::nullopt;
}

// G of a sequence that equals prefix values before t and repeats tail[0..p) from t on.
RationalGF eventually_periodic_gf(const std::vector<Rational>& seq, PeriodInfo info) {
  std::vector<Rational> tail(seq.begin() + info.transient, seq.begin() + info.transient + info.period);
  RationalGF g = gf_from_periodic(tail);
  if (info.transient == 0) return g;
  std::vector<Rational> prefix(seq.begin(), seq.begin() + info.transient);
  RationalGF out;
  out.denominator = g.denominator;
  out.numerator = ZPoly(prefix) * g.denominator_poly() + ZPoly::monomial(1, info.transient) * g.numerator;
  return out.reduced();
}

// Binomial weight C(u + m - 1, m - 1) with u = (n - k)/d, expanded in n.
ClassCoeffs binomial_in_n(int m, long k, int d) {
  Rational dd(d);
  Rational kk(k);
  Rational u0 = -kk / dd;  // u = n/d + u0
  Rational u1 = 1 / dd;
  switch (m) {
    case 1:
      return {0, 0, 1};
    case 2:
      return {0, u1, u0 + 1};
    case 3:
      // (u+1)(u+2)/2
      return {u1 * u1 / 2, (2 * u0 * u1 + 3 * u1) / 2, (u0 * u0 + 3 * u0 + 2) / 2};
    default:
      throw FitError("generating function has a pole of order " + std::to_string(m) +
                     "; only quadratic quasi-polynomials are supported");
  }
}

std::string route_failure(const std::string& route, const std::string& why) { return route + ": " + why; }

}  // namespace

Rational QuasiPolynomial::evaluate(long n) const {
  const ClassCoeffs& c = at(n);
  Rational x(n);
  return (c.c2 * x + c.c1) * x + c.c0;
}

const ClassCoeffs& QuasiPolynomial::at(long n) const {
  long r = n % period;
  if (r < 0) r += period;
  return classes.at(r);
}

QuasiPolynomial QuasiPolynomial::reduced() const {
  for (int p = 1; p < period; ++p) {
    if (period % p != 0) continue;
    bool same = true;
    for (int r = 0; r < period && same; ++r) same = classes[r] == classes[r % p];
    if (same) {
      QuasiPolynomial q = *this;
      q.period = p;
      q.classes.resize(p);
      return q;
    }
  }
  return *this;
}

ZPoly RationalGF::denominator_poly() const {
  ZPoly d(1);
  for (const auto& [f, m] : denominator) d *= factor_poly(f).pow(m);
  return d;
}

RationalGF RationalGF::reduced() const {
  RationalGF g = *this;
  if (g.numerator.is_zero()) {
    g.denominator.clear();
    return g;
  }
  for (auto& [f, m] : g.denominator) {
    while (m > 0) {
      DivMod qr = divmod(g.numerator, factor_poly(f));
      if (!qr.remainder.is_zero()) break;
      g.numerator = qr.quotient;
      --m;
    }
  }
  for (auto it = g.denominator.begin(); it != g.denominator.end();) {
    it = it->second == 0 ? g.denominator.erase(it) : std::next(it);
  }
  return g;
}

std::vector<Rational> RationalGF::series(int n) const { return jslope::series(numerator, denominator_poly(), n); }

std::string RationalGF::to_string() const {
  std::string out = "(" + numerator.to_string() + ")";
  if (denominator.empty()) return out;
  out += " / (";
  bool first = true;
  for (const auto& [f, m] : denominator) {
    if (!first) out += " ";
    first = false;
    out += "(" + factor_poly(f).to_string() + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out + ")";
}

std::vector<Integer> difference(const std::vector<Integer>& seq, int k) {
  if (k < 0) throw DomainError("difference order must be non-negative");
  if (static_cast<int>(seq.size()) <= k) {
    throw DomainError("sequence of length " + std::to_string(seq.size()) + " is too short for difference of order " +
                      std::to_string(k));
  }
  std::vector<Integer> s = seq;
  for (int step = 0; step < k; ++step) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = s[i + 1] - s[i];
    s.pop_back();
  }
  return s;
}

PeriodInfo detect_period(const std::vector<Integer>& seq, int max_period, int max_transient, int min_periods) {
  auto found = find_period(seq, max_period, max_transient, min_periods);
  if (!found) {
    throw FitError("no period <= " + std::to_string(max_period) + " with transient <= " + std::to_string(max_transient) +
                   " explains " + std::to_string(seq.size()) + " values");
  }
  return *found;
}

RationalGF gf_from_periodic(const std::vector<Rational>& values) {
  if (values.empty()) throw DomainError("a periodic sequence needs at least one value");
  RationalGF g;
  g.numerator = ZPoly(values);
  g.denominator = factors_of_one_minus_power(static_cast<int>(values.size()), 1);
  return g.reduced();
}

RationalGF integrate_gf(const RationalGF& g, const Rational& a0) {
  RationalGF out;
  out.numerator = ZPoly::monomial(1, 1) * g.numerator + g.denominator_poly() * a0;
  out.denominator = g.denominator;
  out.denominator[1] += 1;
  return out.reduced();
}

PartialFractionExpansion partial_fraction_expansion(const RationalGF& input) {
  RationalGF g = input.reduced();
  ZPoly den = g.denominator_poly();
  DivMod qr = divmod(g.numerator, den);
  PartialFractionExpansion out;
  out.polynomial_part = qr.quotient;
  for (const auto& [f, m] : g.denominator) {
    ZPoly piece = factor_poly(f).pow(m);
    ZPoly others = divmod(den, piece).quotient;
    ZPoly num = divmod(qr.remainder * inverse_mod(others, piece), piece).remainder;
    if (!num.is_zero()) out.fractions.push_back({f, m, num});
  }
  return out;
}

QuasiPolynomial partial_fractions(const RationalGF& g) {
  PartialFractionExpansion pf = partial_fraction_expansion(g);
  QuasiPolynomial qp;
  qp.transient = pf.polynomial_part.is_zero() ? 0 : pf.polynomial_part.degree() + 1;
  int period = 1;
  for (const auto& fr : pf.fractions) period = static_cast<int>(lcm(static_cast<long>(period), static_cast<long>(fr.factor)));
  qp.period = period;
  qp.classes.assign(period, ClassCoeffs{});
  for (const auto& fr : pf.fractions) {
    const int d = fr.factor;
    const int m = fr.multiplicity;
    // rewrite over (1 - z^d)^m
    ZPoly lift = divmod(ZPoly::one_minus_power(d), factor_poly(d)).quotient;
    ZPoly h = fr.numerator * lift.pow(m);
    std::vector<ClassCoeffs> by_residue(d);
    for (int k = 0; k <= h.degree(); ++k) {
      Rational hk = h[k];
      if (hk == 0) continue;
      ClassCoeffs b = binomial_in_n(m, k, d);
      auto& slot = by_residue[k % d];
      slot.c2 += hk * b.c2;
      slot.c1 += hk * b.c1;
      slot.c0 += hk * b.c0;
    }
    for (int r = 0; r < period; ++r) {
      const auto& s = by_residue[r % d];
      qp.classes[r].c2 += s.c2;
      qp.classes[r].c1 += s.c1;
      qp.classes[r].c0 += s.c0;
    }
  }
  return qp.reduced();
}

FitResult fit(const std::vector<Integer>& seq, const FitOptions& options) {
  FitResult r = fit(to_rationals(seq), options);
  return r;
}

FitResult fit(const std::vector<Rational>& seq, const FitOptions& options) {
  const int len = static_cast<int>(seq.size());
  if (len == 0) throw FitError("cannot fit an empty sequence");
  std::vector<std::string> failures;

  auto finish = [&](RationalGF gf, const std::string& route) -> std::optional<FitResult> {
    FitResult out;
    out.route = route;
    out.samples = len;
    out.gf = gf.reduced();
    out.expansion = partial_fraction_expansion(out.gf);
    QuasiPolynomial qp = partial_fractions(out.gf);
    // smallest threshold from which the formula matches every sample
    int t = len;
    while (t > 0 && qp.evaluate(t - 1) == seq[t - 1]) --t;
    qp.transient = std::min(t, std::max(qp.transient, 0));
    if (t > qp.transient) qp.transient = t;
    const int need = qp.transient + 3 * qp.period + 3;
    if (len < need) {
      failures.push_back(route_failure(route, "period " + std::to_string(qp.period) + " after transient " +
                                                  std::to_string(qp.transient) + " needs " + std::to_string(need) +
                                                  " samples, have " + std::to_string(len)));
      return std::nullopt;
    }
    // independent check: interpolate each class through its first three samples
    for (int r = 0; r < qp.period; ++r) {
      std::vector<long> ns;
      for (long n = qp.transient; n < len && ns.size() < 3; ++n) {
        if (((n % qp.period) + qp.period) % qp.period == r) ns.push_back(n);
      }
      Rational x0(ns[0]), x1(ns[1]), x2(ns[2]);
      Rational y0 = seq[ns[0]], y1 = seq[ns[1]], y2 = seq[ns[2]];
      Rational d01 = (y1 - y0) / (x1 - x0);
      Rational d12 = (y2 - y1) / (x2 - x1);
      Rational c2 = (d12 - d01) / (x2 - x0);
      Rational c1 = d01 - c2 * (x0 + x1);
      Rational c0 = y0 - c2 * x0 * x0 - c1 * x0;
      ClassCoeffs interp{c2, c1, c0};
      if (!(interp == qp.classes[r])) {
        failures.push_back(route_failure(route, "sequence not quasi-quadratic in window (class " + std::to_string(r) +
                                                    " disagrees with interpolation)"));
        return std::nullopt;
      }
    }
    for (long n = qp.transient; n < len; ++n) {
      if (qp.evaluate(n) != seq[n]) {
        failures.push_back(route_failure(route, "sequence not quasi-quadratic in window (mismatch at n=" +
                                                    std::to_string(n) + ")"));
        return std::nullopt;
      }
    }
    bool integral = std::all_of(seq.begin(), seq.end(), [](const Rational& x) { return is_integer(x); });
    if (integral) {
      for (long n = 0; n <= qp.transient + 4L * qp.period; ++n) {
        if (!is_integer(qp.evaluate(n))) throw InternalError("fitted quasi-polynomial is not integer-valued");
      }
    }
    out.qp = qp;
    integrality_check(out.qp);
    return out;
  };

  // third differences, as in the standard procedure
  if (len > 3) {
    std::vector<Rational> d3 = rdifference(seq, 3);
    if (auto info = find_period(d3, options.max_period, options.max_transient, 2)) {
      RationalGF g = eventually_periodic_gf(d3, *info);
      std::vector<Rational> d2 = rdifference(seq, 2);
      std::vector<Rational> d1 = rdifference(seq, 1);
      g = integrate_gf(integrate_gf(integrate_gf(g, d2[0]), d1[0]), seq[0]);
      if (auto r = finish(g, "difference-3")) return *r;
    } else {
      failures.push_back("difference-3: third differences are not eventually periodic in the window");
    }
  }
  // second differences, one full period plus validation
  if (len > 2) {
    std::vector<Rational> d2 = rdifference(seq, 2);
    if (auto info = find_period(d2, options.max_period, options.max_transient, 1)) {
      RationalGF g = eventually_periodic_gf(d2, *info);
      std::vector<Rational> d1 = rdifference(seq, 1);
      g = integrate_gf(integrate_gf(g, d1[0]), seq[0]);
      if (auto r = finish(g, "difference-2")) return *r;
    } else {
      failures.push_back("difference-2: second differences are not eventually periodic in the window");
    }
  }
  // third differences with step pi: catches classes whose linear coefficients differ
  for (int t = 0; t <= options.max_transient; ++t) {
    bool any = false;
    for (int p = 1; p <= options.max_period; ++p) {
      if (len - t < 3 * p + 3) break;
      any = true;
      bool ok = true;
      for (int n = t; n + 3 * p < len && ok; ++n) {
        ok = seq[n + 3 * p] - 3 * seq[n + 2 * p] + 3 * seq[n + p] - seq[n] == 0;
      }
      if (!ok) continue;
      ZPoly kill = ZPoly::one_minus_power(p).pow(3);
      RationalGF g;
      g.numerator = (kill * ZPoly(seq)).truncated(t + 3 * p);
      g.denominator = factors_of_one_minus_power(p, 3);
      if (auto r = finish(g, "period-step")) return *r;
      goto done;
    }
    if (!any) break;
  }
  failures.push_back("period-step: no period explains the window");
done:
  std::string msg = "sequence not quasi-quadratic in window:";
  for (const auto& f : failures) msg += " [" + f + "]";
  throw FitError(msg);
}

std::set<Rational> slopes(const QuasiPolynomial& qp) {
  std::set<Rational> s;
  for (const auto& c : qp.classes) s.insert(2 * c.c2);
  return s;
}

std::set<Rational> estimate_cluster_slopes(const std::vector<Integer>& seq, const QuasiPolynomial& qp) {
  Rational max1 = 0;
  Rational max0 = 0;
  for (const auto& c : qp.classes) {
    max1 = std::max(max1, abs(c.c1));
    max0 = std::max(max0, abs(c.c0));
  }
  Rational bound = 2 * max1 + 2 * max0 + 1;
  for (long n = std::max(qp.transient, 1); n < static_cast<long>(seq.size()); ++n) {
    Rational nn(n);
    Rational ratio = 2 * Rational(seq[n]) / (nn * nn);
    Rational gap = abs(ratio - 2 * qp.at(n).c2);
    if (gap > bound / nn) {
      throw FitError("2 seq(n)/n^2 strays from its cluster point at n=" + std::to_string(n) + " by " + to_string(gap));
    }
  }
  return slopes(qp);
}

std::vector<IntegralityWitness> integrality_check(const QuasiPolynomial& qp) {
  std::vector<IntegralityWitness> out;
  Rational p2(static_cast<long>(qp.period) * qp.period);
  for (const auto& s : slopes(qp)) {
    Rational scaled = s * p2;
    if (!is_integer(scaled)) {
      throw InternalError("slope " + to_string(s) + " times period^2 is not an integer");
    }
    out.push_back({s, scaled});
  }
  return out;
}

std::vector<Integer> parse_sequence(const std::string& text) {
  std::vector<Integer> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(b, e - b + 1);
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    bool ok = i < tok.size();
    for (std::size_t j = i; j < tok.size() && ok; ++j) ok = std::isdigit(static_cast<unsigned char>(tok[j])) != 0;
    if (!ok) throw ParseError("sequence line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    out.emplace_back(tok, 10);
  }
  return out;
}

std::vector<Integer> load_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sequence(ss.str());
}

std::string describe(const QuasiPolynomial& qp) {
  std::ostringstream out;
  out << "period " << qp.period << ", valid for n >= " << qp.transient;
  for (int r = 0; r < qp.period; ++r) {
    const auto& c = qp.classes[r];
    out << "\n  n = " << r << " mod " << qp.period << ": c2 = " << to_string(c.c2) << ", c1 = " << to_string(c.c1)
        << ", c0 = " << to_string(c.c0) << ", slope = " << to_string(Rational(2 * c.c2));
  }
  return out.str();
}

}  // namespace jslope

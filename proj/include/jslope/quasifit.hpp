#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jslope/number.hpp"
#include "jslope/zpoly.hpp"

namespace jslope {

/// c2*n^2 + c1*n + c0 on one residue class.
struct ClassCoeffs {
  Rational c2, c1, c0;
  friend bool operator==(const ClassCoeffs&, const ClassCoeffs&) = default;
};

/// Quadratic quasi-polynomial, valid for n >= transient.
struct QuasiPolynomial {
  int period = 1;
  int transient = 0;
  std::vector<ClassCoeffs> classes;  // indexed by n mod period

  Rational evaluate(long n) const;
  const ClassCoeffs& at(long n) const;
  /// Shrinks the period to the smallest one describing the same function.
  QuasiPolynomial reduced() const;
};

/// Denominator factors: key 1 stands for (1 - z), key d > 1 for Phi_d(z).
using FactorMap = std::map<int, int>;

/// numerator / prod of factors.
struct RationalGF {
  ZPoly numerator;
  FactorMap denominator;

  ZPoly denominator_poly() const;
  /// Cancels common factors between numerator and denominator.
  RationalGF reduced() const;
  std::vector<Rational> series(int n) const;
  std::string to_string() const;
};

/// numerator / factor^multiplicity, one piece of a partial fraction expansion.
struct PartialFraction {
  int factor = 1;  // as in FactorMap
  int multiplicity = 1;
  ZPoly numerator;
};

/// k-th forward difference. Throws DomainError when the list has k or fewer entries.
std::vector<Integer> difference(const std::vector<Integer>& seq, int k);

struct PeriodInfo {
  int period = 1;
  int transient = 0;
  friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

/// Lexicographically least (transient, period) with seq(n + period) = seq(n) for all
/// observed n >= transient, seeing at least `min_periods` full periods plus three more
/// values past the transient. Throws FitError when nothing fits.
PeriodInfo detect_period(const std::vector<Integer>& seq, int max_period, int max_transient, int min_periods = 2);

/// (sum_{r < pi} v_r z^r) / (1 - z^pi), reduced.
RationalGF gf_from_periodic(const std::vector<Rational>& values);

/// G_a from G_{Delta a} and a(0): (z g + a0) / (1 - z), reduced.
RationalGF integrate_gf(const RationalGF& g, const Rational& a0);

/// Splits a reduced generating function over its denominator factors. The
/// polynomial part (numerator degree >= denominator degree) is returned separately.
struct PartialFractionExpansion {
  ZPoly polynomial_part;
  std::vector<PartialFraction> fractions;
};
PartialFractionExpansion partial_fraction_expansion(const RationalGF& g);

/// Coefficients of g as a quadratic quasi-polynomial. Throws FitError for poles of
/// order above 3.
QuasiPolynomial partial_fractions(const RationalGF& g);

struct FitOptions {
  int max_period = 32;
  int max_transient = 8;
};

struct FitResult {
  QuasiPolynomial qp;
  RationalGF gf;
  PartialFractionExpansion expansion;
  /// "difference-3", "difference-2" or "period-step" depending on which route explained the data.
  std::string route;
  int samples = 0;
};

/// Difference the samples, find the period, rebuild the generating function and read
/// off the quasi-polynomial, then cross-check it against every sample.
FitResult fit(const std::vector<Integer>& seq, const FitOptions& options = {});
FitResult fit(const std::vector<Rational>& seq, const FitOptions& options = {});

/// {2 c2_r}
std::set<Rational> slopes(const QuasiPolynomial& qp);

/// Cluster points of 2 seq(n)/n^2 from the fit, after checking every sample obeys
/// |2 seq(n)/n^2 - 2 c2| <= C/n. Throws FitError otherwise.
std::set<Rational> estimate_cluster_slopes(const std::vector<Integer>& seq, const QuasiPolynomial& qp);

struct IntegralityWitness {
  Rational slope;
  Rational scaled;  // slope * period^2
};

/// Checks slope * period^2 is an integer for every slope; throws InternalError if not.
std::vector<IntegralityWitness> integrality_check(const QuasiPolynomial& qp);

/// One integer per line, '#' comments.
std::vector<Integer> parse_sequence(const std::string& text);
std::vector<Integer> load_sequence(const std::string& path);

std::string describe(const QuasiPolynomial& qp);

}  // namespace jslope

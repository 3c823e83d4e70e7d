#pragma once

#include <vector>

#include "jslope/knot.hpp"
#include "jslope/number.hpp"
#include "jslope/quasifit.hpp"
#include "jslope/tables.hpp"

namespace jslope {

struct DegreePair {
  Rational delta;       // max degree
  Rational delta_star;  // min degree
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

struct SymmetrizedPair {
  Rational delta_minus;  // delta + delta*
  Rational delta_plus;   // delta - delta*
  friend bool operator==(const SymmetrizedPair&, const SymmetrizedPair&) = default;
};

struct AlternatingInvariants {
  long c = 0;
  long w = 0;
  long sigma = 0;
  long c_plus = 0;
  long c_minus = 0;
  friend bool operator==(const AlternatingInvariants&, const AlternatingInvariants&) = default;
};

/// c, w and sigma = |A| - 1 - c+ of a reduced alternating diagram.
AlternatingInvariants invariants_of(const AlternatingData& data);

DegreePair alt_degrees(const AlternatingData& data, long n);
SymmetrizedPair alt_symmetrized(const AlternatingInvariants& inv, long n);

/// c, sigma and w from delta-(1), delta-(2), delta+(1); c+ and c- follow from c and w.
AlternatingInvariants recover_invariants(long dm1, long dm2, long dp1);

/// Degrees of T(a,b); negative a or b gives the mirror image.
DegreePair torus_degrees(long a, long b, long n);

/// Both degree quasi-polynomials of the (-2,3,p) pretzel knot together with the
/// exact sequences they were fitted from.
struct PretzelForm {
  long p = 7;
  QuasiPolynomial delta;
  QuasiPolynomial delta_star;
  std::vector<Integer> delta_values;
  std::vector<Integer> delta_star_values;
};

/// Cached per p. The first colors come from the bracket engine, the rest from the
/// third-difference generating functions of the family.
const PretzelForm& pretzel_form(long p);

DegreePair pretzel_degrees(long p, long n);

/// Exact sequence of the pretzel degrees for n = 0..N.
std::vector<Integer> pretzel_sequence(long p, bool max_degree, int N);

struct PretzelSlopes {
  int period = 1;
  Rational js;
  Rational js_star;
};

/// Period and Jones slopes as given by the family formula (not by a fit).
PretzelSlopes pretzel_slopes(long p);

/// Boundary slopes for p >= 7 or p <= -1; DomainError otherwise.
SlopeSet pretzel_boundary_slopes(long p);

}  // namespace jslope

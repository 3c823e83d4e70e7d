#include <cstdlib>
#include <numeric>

#include "jslope/colored_jones.hpp"
#include "jslope/error.hpp"

namespace jslope {

namespace {

// Exact quotient of f by (x^span - 1) where x = q^(1/4). Works from the top term
// down; a leftover means the numerator was not divisible.
LaurentPoly divide_by_binomial(LaurentPoly f, LaurentPoly::Key span) {
  LaurentPoly quotient;
  while (!f.is_zero()) {
    auto top = std::prev(f.terms().end());
    LaurentPoly::Key k = top->first;
    Integer c = top->second;
    if (k - span < f.min_key()) {
      throw InternalError("Morton numerator is not divisible by the quantum denominator");
    }
    quotient.add_term(k - span, c);
    f.add_term(k, -c);
    f.add_term(k - span, c);
  }
  return quotient;
}

}  // namespace

LaurentPoly morton_colored_jones(long a, long b, int n) {
  if (n < 0) throw DomainError("color must be non-negative");
  if (a < 0) {
    a = -a;
    b = -b;
  }
  if (b < 0) return morton_colored_jones(a, -b, n).mirror();
  if (a < 2 || b < 2 || std::gcd(a, b) != 1) throw DomainError("Morton formula needs coprime a,b >= 2");

  const LaurentPoly::Key ab = a * b;
  LaurentPoly sum;
  for (long j = -n; j <= n; j += 2) {
    sum.add_term(-ab * j * j + 2 * (a - b) * j + 2, 1);
    sum.add_term(-ab * j * j + 2 * (a + b) * j - 2, -1);
  }
  const LaurentPoly::Key e = 2 * (n + 1);
  LaurentPoly q = divide_by_binomial(sum.shifted(e), 2 * e);
  LaurentPoly result = q.shifted(ab * n * (n + 2));
  if (!result.is_integral()) throw InternalError("Morton formula produced a non-integral exponent");
  return result;
}

LaurentPoly connected_sum(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

}  // namespace jslope

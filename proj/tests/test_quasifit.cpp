#include <doctest.h>

#include "fixtures.hpp"
#include "jslope/closed_forms.hpp"
#include "jslope/colored_jones.hpp"
#include "jslope/error.hpp"
#include "jslope/quasifit.hpp"
#include "jslope/tables.hpp"

using namespace jslope;

namespace {

ZPoly Z(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(v);
}

std::vector<Integer> ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

std::vector<long> longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

Rational R(const std::string& s) { return parse_rational(s); }

const std::vector<long> pretzel7 = {0,   13,  35,  67,  108, 158,  217,  286,  364,  451,
                                    547, 653, 768, 892, 1025, 1168, 1320, 1481, 1651, 1831};

}  // namespace

TEST_SUITE("quasifit") {
  TEST_CASE("differences") {
    CHECK(longs(difference(ints({0, 5, 10, 15, 20}), 1)) == std::vector<long>{5, 5, 5, 5});
    CHECK(longs(difference(ints(pretzel7), 3)) ==
          std::vector<long>{1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1});
    CHECK(longs(difference(ints(pretzel7), 2)) ==
          std::vector<long>{9, 10, 9, 9, 9, 10, 9, 9, 9, 10, 9, 9, 9, 10, 9, 9, 9, 10});
    CHECK(longs(difference(ints({3, 1, 4}), 0)) == std::vector<long>{3, 1, 4});
    CHECK_THROWS_AS(difference(ints({1, 2}), 2), DomainError);
  }

  TEST_CASE("period detection") {
    CHECK(detect_period(ints({1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1}), 32, 8) == PeriodInfo{4, 0});
    CHECK(detect_period(ints({5, 5, 5, 5, 5, 5, 5}), 32, 8) == PeriodInfo{1, 0});
    CHECK(detect_period(ints({17, 17, 17, 17, 17, 9, 25, 9, 25, 9, 25, 9, 25, 9, 25}), 32, 8) == PeriodInfo{2, 5});
    CHECK_THROWS_AS(detect_period(ints({1, 2, 3, 4, 5, 6, 7, 8}), 3, 2), FitError);
  }

  TEST_CASE("generating functions of periodic sequences") {
    RationalGF g = gf_from_periodic({1, -1, 0, 0});
    CHECK(g.numerator == ZPoly(1));
    CHECK(g.denominator == FactorMap{{2, 1}, {4, 1}});
    RationalGF c = gf_from_periodic({5});
    CHECK(c.numerator == ZPoly(5));
    CHECK(c.denominator == FactorMap{{1, 1}});
    RationalGF odd = gf_from_periodic({0, 1});
    CHECK(odd.numerator == Z({0, 1}));
    CHECK(odd.denominator == FactorMap{{1, 1}, {2, 1}});
    CHECK(odd.series(6) == std::vector<Rational>{0, 1, 0, 1, 0, 1});
  }

  TEST_CASE("integration") {
    RationalGF d = integrate_gf(gf_from_periodic({5}), 0);
    CHECK(d.numerator == Z({0, 5}));
    CHECK(d.denominator == FactorMap{{1, 2}});
    RationalGF g = gf_from_periodic({1, -1, 0, 0});
    g = integrate_gf(g, 9);
    g = integrate_gf(g, 13);
    g = integrate_gf(g, 0);
    CHECK(g.numerator == Z({0, 13, 9, 10, 9, -4}));
    CHECK(g.denominator == FactorMap{{1, 3}, {2, 1}, {4, 1}});
    std::vector<Rational> s = g.series(20);
    for (int n = 0; n < 20; ++n) CHECK(s[n] == pretzel7[n]);
    RationalGF k = integrate_gf(RationalGF{ZPoly(), {}}, 7);
    CHECK(k.numerator == ZPoly(7));
    CHECK(k.denominator == FactorMap{{1, 1}});
  }

  TEST_CASE("partial fractions") {
    QuasiPolynomial c = partial_fractions(RationalGF{ZPoly(4), {{1, 1}}});
    CHECK(c.period == 1);
    CHECK(c.classes[0] == ClassCoeffs{0, 0, 4});

    RationalGF g{Z({0, 13, 9, 10, 9, -4}), {{1, 3}, {2, 1}, {4, 1}}};
    QuasiPolynomial qp = partial_fractions(g);
    CHECK(qp.period == 4);
    std::vector<Rational> eps = {0, R("1/8"), R("1/2"), R("1/8")};
    for (int r = 0; r < 4; ++r) {
      CHECK(qp.classes[r].c2 == R("37/8"));
      CHECK(qp.classes[r].c1 == R("17/2"));
      CHECK(qp.classes[r].c0 == -eps[r]);
    }

    PartialFractionExpansion pf = partial_fraction_expansion(g);
    CHECK(pf.polynomial_part.is_zero());
    ZPoly at_one, phi2, phi4;
    for (const auto& f : pf.fractions) {
      if (f.factor == 1) {
        CHECK(f.multiplicity == 3);
        at_one = f.numerator;
      } else if (f.factor == 2) {
        phi2 = f.numerator;
      } else if (f.factor == 4) {
        phi4 = f.numerator;
      }
    }
    CHECK(at_one * Rational(16) == Z({-3, 216, -65}));
    CHECK((phi2 * cyclotomic(4) + phi4 * cyclotomic(2)) * Rational(16) == Z({3, 4, -1}));

    CHECK_THROWS_AS(partial_fractions(RationalGF{ZPoly(1), {{1, 4}}}), FitError);
  }

  TEST_CASE("the printed sequences") {
    for (const auto& p : fixtures::sequences) {
      CAPTURE(p.knot);
      CAPTURE(p.max_degree);
      const auto* row = bundled_sequences().find(p.knot);
      REQUIRE(row);
      std::vector<Integer> full = ints(p.max_degree ? row->delta : row->delta_star);
      REQUIRE(full.size() >= p.prefix.size());
      CHECK(std::vector<Integer>(full.begin(), full.begin() + p.prefix.size()) == ints(p.prefix));
      FitResult r = fit(full);
      QuasiPolynomial qp = r.qp.reduced();
      CHECK(qp.period == p.period);
      CHECK(slopes(r.qp) == std::set<Rational>{2 * R(p.c2)});
      if (!p.classes.empty()) {
        REQUIRE(qp.classes.size() == p.classes.size());
        for (std::size_t i = 0; i < p.classes.size(); ++i) {
          CHECK(qp.classes[i] == ClassCoeffs{R(p.classes[i].c2), R(p.classes[i].c1), R(p.classes[i].c0)});
        }
      }
      for (const auto& c : qp.classes) CHECK(c.c2 == R(p.c2));
      CHECK(r.gf.to_string() == p.gf);
      if (!p.fractions.empty()) {
        REQUIRE(r.expansion.fractions.size() == p.fractions.size());
        for (std::size_t i = 0; i < p.fractions.size(); ++i) {
          CHECK(r.expansion.fractions[i].factor == p.fractions[i].factor);
          CHECK(r.expansion.fractions[i].multiplicity == p.fractions[i].multiplicity);
          CHECK(r.expansion.fractions[i].numerator.to_string() == p.fractions[i].numerator);
        }
      }
      for (std::size_t n = r.qp.transient; n < full.size(); ++n) CHECK(r.qp.evaluate(n) == full[n]);
      CHECK_NOTHROW(integrality_check(r.qp));
    }
  }

  TEST_CASE("mono-sloped numerators") {
    FitResult r = fit(ints(bundled_sequences().find("8_19")->delta));
    const PartialFraction* cube = nullptr;
    for (const auto& f : r.expansion.fractions) {
      if (f.factor == 1 && f.multiplicity == 3) cube = &f;
    }
    REQUIRE(cube);
    CHECK(cube->numerator * Rational(4) == Z({-1, 36, -11}));
    Rational sum = 0;
    for (const auto& c : cube->numerator.coeffs()) sum += c;
    CHECK(sum == 6);
    CHECK(slopes(r.qp) == std::set<Rational>{6});
  }

  TEST_CASE("fit examples") {
    FitResult k = fit(ints({0, 2, 4, 6, 8, 10}));
    CHECK(k.qp.reduced().period == 1);
    CHECK(k.qp.classes[0] == ClassCoeffs{0, 2, 0});

    std::vector<Integer> squares;
    for (long n = 0; n <= 8; ++n) squares.push_back(n * n);
    FitResult sq = fit(squares);
    CHECK(sq.qp.period == 1);
    CHECK(sq.qp.transient == 0);
    CHECK(sq.qp.classes[0] == ClassCoeffs{1, 0, 0});

    FitResult p7 = fit(ints(pretzel7));
    CHECK(p7.qp.period == 4);
    CHECK(p7.route == "difference-3");
    CHECK(slopes(p7.qp) == std::set<Rational>{R("37/4")});
    CHECK(p7.gf.numerator == Z({0, 13, 9, 10, 9, -4}));

    FitResult zeros = fit(ints({0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(zeros.qp.classes[0] == ClassCoeffs{0, 0, 0});

    CHECK_THROWS_AS(fit(ints({0, 1, 5})), FitError);
    std::vector<Integer> cubes;
    for (long n = 0; n <= 12; ++n) cubes.push_back(n * n * n);
    CHECK_THROWS_AS(fit(cubes), FitError);
  }

  TEST_CASE("slopes and cluster points") {
    std::vector<Integer> k817;
    for (long n = 0; n <= 10; ++n) k817.push_back(2 * n * n + 2 * n);
    FitResult a = fit(k817);
    CHECK(estimate_cluster_slopes(k817, a.qp) == std::set<Rational>{4});

    std::vector<Integer> flat(9, Integer(3));
    CHECK(estimate_cluster_slopes(flat, fit(flat).qp) == std::set<Rational>{0});

    std::vector<Integer> t34;
    for (int n = 0; n <= 12; ++n) t34.push_back(morton_colored_jones(3, 4, n).deg().get_num());
    FitResult t = fit(t34);
    CHECK(estimate_cluster_slopes(t34, t.qp) == std::set<Rational>{6});
    CHECK(estimate_cluster_slopes(t34, t.qp) == slopes(t.qp));

    FitResult trefoil = fit(ints({0, 4, 11, 21, 34, 50, 69}));
    CHECK(slopes(trefoil.qp) == std::set<Rational>{3});

    std::vector<Integer> off = t34;
    off[10] += 1000;
    CHECK_THROWS_AS(estimate_cluster_slopes(off, t.qp), FitError);
  }

  TEST_CASE("integrality witnesses") {
    auto w = integrality_check(pretzel_form(7).delta);
    REQUIRE(w.size() == 1);
    CHECK(w[0].slope == R("37/4"));
    CHECK(w[0].scaled == 148);
    QuasiPolynomial q820 = fit(ints(fixtures::sequences[3].prefix)).qp.reduced();
    CHECK(integrality_check(q820)[0].scaled == 12);
    QuasiPolynomial three{1, 0, {{R("3/2"), 0, 0}}};
    CHECK(integrality_check(three)[0].scaled == 3);
    QuasiPolynomial bad{2, 0, {{R("1/16"), 0, 0}, {R("1/16"), 0, 0}}};
    CHECK_THROWS_AS(integrality_check(bad), InternalError);
  }

  TEST_CASE("sequence files and descriptions") {
    CHECK(longs(parse_sequence("# delta\n0\n 8\n23 # n=2\n\n43\n")) == std::vector<long>{0, 8, 23, 43});
    CHECK_THROWS_AS(parse_sequence("0\nx\n"), ParseError);
    std::string d = describe(fit(ints(bundled_sequences().find("8_19")->delta)).qp);
    CHECK(d.find("11/2") != std::string::npos);
    CHECK(d.find("-1/2") != std::string::npos);
  }
}

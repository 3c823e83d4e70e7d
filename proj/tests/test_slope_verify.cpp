#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "jslope/error.hpp"
#include "jslope/slope_verify.hpp"

using namespace jslope;

namespace {

Rational R(const std::string& s) { return parse_rational(s); }

SlopeSet slope_set(const std::vector<std::string>& v) {
  SlopeSet out;
  for (const auto& s : v) out.insert(Slope::parse(s));
  return out;
}

}  // namespace

TEST_SUITE("slope-verify") {
  TEST_CASE("the conjecture table") {
    std::vector<SlopeReport> reports = analyze_all(table_knots());
    REQUIRE(reports.size() == fixtures::table.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& row = fixtures::table[i];
      const SlopeReport& r = reports[i];
      CAPTURE(row.knot);
      CHECK(r.label == row.knot);
      CHECK(r.verdict == Verdict::verified);
      CHECK(r.period == row.period);
      CHECK(r.delta_period == row.period);
      CHECK(r.js == std::set<Rational>{R(row.js)});
      CHECK(r.js_star == std::set<Rational>{R(row.js_star)});
      CHECK(r.boundary_slopes == slope_set(row.bs));
      CHECK(r.missing.empty());
      CHECK(r.jones_diameter == R(row.js) - R(row.js_star));
      CHECK(r.degree_source == "bundled");
    }
  }

  TEST_CASE("named examples") {
    SlopeReport k = analyze(parse_knot("name:8_19"));
    CHECK(k.period == 2);
    CHECK(k.js == std::set<Rational>{6});
    CHECK(k.js_star == std::set<Rational>{0});
    CHECK(k.verdict == Verdict::verified);

    SlopeReport p = analyze(parse_knot("pretzel:-2,3,7"));
    CHECK(p.js == std::set<Rational>{R("37/4")});
    CHECK(p.period == 4);
    CHECK(p.verdict == Verdict::verified);
    CHECK(p.boundary_source == "pretzel");

    SlopeReport t = analyze(parse_knot("torus:2,3"));
    CHECK(t.js == std::set<Rational>{3});
    CHECK(t.js_star == std::set<Rational>{0});
    CHECK(t.boundary_slopes == SlopeSet{Rational(0), Rational(6)});
    CHECK(t.verdict == Verdict::verified);

    SlopeReport m = analyze(parse_knot("mirror:torus:2,3"));
    CHECK(m.js == std::set<Rational>{0});
    CHECK(m.js_star == std::set<Rational>{-3});
    CHECK(m.boundary_slopes == SlopeSet{Rational(-6), Rational(0)});
    CHECK(m.verdict == Verdict::verified);

    SlopeReport mm = analyze(parse_knot("mirror:name:8_20"));
    CHECK(mm.js == std::set<Rational>{5});
    CHECK(mm.js_star == std::set<Rational>{R("-4/3")});
    CHECK(mm.verdict == Verdict::verified);
  }

  TEST_CASE("pretzel family") {
    for (long p = -9; p <= 15; p += 2) {
      if (p >= 1 && p <= 5) continue;
      SlopeReport r = analyze(KnotSpec{Pretzel237{p}, false});
      PretzelSlopes s = pretzel_slopes(p);
      CAPTURE(p);
      CHECK(r.verdict == Verdict::verified);
      CHECK(r.js == std::set<Rational>{s.js});
      CHECK(r.js_star == std::set<Rational>{s.js_star});
      CHECK(r.period == s.period);
    }
    for (long p : {1, 3, 5}) {
      SlopeReport r = analyze(KnotSpec{Pretzel237{p}, false});
      CAPTURE(p);
      CHECK(r.boundary_source == "slope-db");
      CHECK(r.verdict == Verdict::verified);
    }
  }

  TEST_CASE("torus family") {
    for (long a = 2; a <= 7; ++a) {
      for (long b = a + 1; b <= 7; ++b) {
        if (std::gcd(a, b) != 1) continue;
        SlopeReport r = analyze(KnotSpec{Torus{a, b}, false});
        CAPTURE(a);
        CAPTURE(b);
        CHECK(r.verdict == Verdict::verified);
        CHECK(r.boundary_slopes == SlopeSet{Rational(0), Rational(a * b)});
        CHECK(r.period == (a == 2 ? 1 : 2));
        CHECK(r.js == std::set<Rational>{make_rational(a * b, 2)});
      }
    }
    SlopeReport r = analyze(parse_knot("torus:5,6"));
    CHECK(r.boundary_slopes == SlopeSet{Rational(0), Rational(30)});
    CHECK(r.verdict == Verdict::verified);
  }

  TEST_CASE("missing data and refutations") {
    SlopeReport r = analyze(parse_knot("alt:2,3,3,4"));
    CHECK(r.verdict == Verdict::no_data);
    CHECK_FALSE(r.boundary_slopes);

    BoundarySlopeTable wrong = BoundarySlopeTable::parse("8_19\t0,6\n");
    AnalyzeOptions opt;
    opt.slope_db = &wrong;
    SlopeReport bad = analyze(parse_knot("name:8_19"), opt);
    CHECK(bad.verdict == Verdict::refuted_in_window);
    CHECK(bad.missing == std::vector<Rational>{12});

    AnalyzeOptions tiny;
    tiny.max_color = 3;
    CHECK_THROWS_AS(analyze(parse_knot("name:8_19"), tiny), FitError);
  }

  TEST_CASE("crossing bounds") {
    PdCode k817 = knot_table().pd("8_17");
    SlopeReport a = analyze(parse_knot("name:8_17"));
    CHECK(a.js == std::set<Rational>{4});
    CHECK(a.js_star == std::set<Rational>{-4});
    CHECK(check_crossing_bounds(a, smoothing_counts(k817)).passed);

    SlopeReport b = analyze(parse_knot("name:8_19"));
    DiagramStats s819 = smoothing_counts(knot_table().pd("8_19"));
    CHECK(s819.c_plus == 8);
    CHECK(check_crossing_bounds(b, s819).passed);

    SlopeReport u = analyze(parse_knot("name:0_1"));
    CHECK(u.js == std::set<Rational>{0});
    CHECK(check_crossing_bounds(u, smoothing_counts({})).passed);

    DiagramStats small = s819;
    small.c_plus = 5;
    CheckResult f = check_crossing_bounds(b, small);
    CHECK_FALSE(f.passed);
    CHECK(f.failures.size() == 2);

    for (const auto& r : analyze_all(table_knots())) {
      CAPTURE(r.label);
      CHECK(check_crossing_bounds(r, smoothing_counts(knot_table().pd(r.label))).passed);
    }
  }

  TEST_CASE("alternating theorems") {
    AlternatingCheck t = check_alternating_theorems({3, 0, 2, 3}, 8);
    CHECK(t.result.passed);
    CHECK(t.period == 1);
    CHECK(t.js == std::set<Rational>{3});
    CHECK(t.js_star == std::set<Rational>{0});
    CHECK(t.checkerboard == SlopeSet{Rational(6), Rational(0)});

    AlternatingData d817 = *reduced_alternating_data(knot_table().pd("8_17"));
    AlternatingCheck k = check_alternating_theorems(d817, 8);
    CHECK(k.result.passed);
    CHECK(k.checkerboard == SlopeSet{Rational(8), Rational(-8)});
    for (const auto& s : k.checkerboard) CHECK(bundled_slope_db().find("8_17")->count(s) == 1);

    AlternatingData d2355 = *reduced_alternating_data(pretzel_pd({2, 3, 5, 5}));
    CHECK(d2355.c_plus == 15);
    CHECK(d2355.c_minus == 0);
    AlternatingCheck p = check_alternating_theorems(d2355, 8);
    CHECK(p.result.passed);
    CHECK(p.js == std::set<Rational>{15});
    CHECK(p.js_star == std::set<Rational>{0});

    for (const auto& key : knot_table().keys()) {
      if (auto d = reduced_alternating_data(knot_table().pd(key))) {
        CAPTURE(key);
        AlternatingCheck c = check_alternating_theorems(*d, 8);
        CHECK(c.result.passed);
        CHECK(c.jones_diameter == d->c_plus + d->c_minus);
      }
    }
  }

  TEST_CASE("mutants") {
    MutationReport m = mutation_comparison(parse_knot("name:P(2,3,5,5)"), parse_knot("name:P(2,5,3,5)"));
    CHECK(m.jones_agree);
    CHECK(m.first.js == std::set<Rational>{15});
    CHECK(m.first.js_star == std::set<Rational>{0});
    CHECK(m.boundary_known);
    CHECK(m.only_first == SlopeSet{Rational(24)});
    CHECK(m.only_second.empty());

    MutationReport same = mutation_comparison(parse_knot("name:8_19"), parse_knot("name:8_19"));
    CHECK(same.jones_agree);
    CHECK(render_text(same.first) == render_text(same.second));
    CHECK(same.only_first.empty());

    MutationReport diff = mutation_comparison(parse_knot("name:8_19"), parse_knot("name:8_20"));
    CHECK_FALSE(diff.jones_agree);
    CHECK(render_text(diff).find("not mutation-consistent") != std::string::npos);
  }

  TEST_CASE("labels and lookups") {
    CHECK(knot_label(parse_knot("torus:3,4")) == "T(3,4)");
    CHECK(knot_label(parse_knot("pretzel:-2,3,7")) == "P(-2,3,7)");
    CHECK(knot_label(parse_knot("mirror:name:8_20")) == "mirror of 8_20");
    std::string src;
    CHECK(lookup_boundary_slopes(parse_knot("torus:3,-4"), nullptr, &src) == SlopeSet{Rational(-12), Rational(0)});
    CHECK(src == "torus");
    CHECK(lookup_boundary_slopes(parse_knot("name:T(2,3)"), nullptr, &src) == SlopeSet{Rational(0), Rational(6)});
    CHECK_FALSE(lookup_boundary_slopes(parse_knot("name:4_1")));
    CHECK(default_max_color(parse_knot("torus:2,3")) == 16);
    CHECK(default_max_color(parse_knot("pretzel:-2,3,7")) >= 20);
    CHECK(default_max_color(parse_knot("name:9_47")) == 20);
    CHECK(default_max_color(parse_knot("alt:3,0,2,3")) == 8);
    CHECK(to_string(Verdict::refuted_in_window) == "refuted-in-window");
  }
}

#include "jslope/slope_verify.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

#include "jslope/closed_forms.hpp"
#include "jslope/error.hpp"
#include "parallel.hpp"

namespace jslope {

namespace {

// "T(a,b)" and "P(-2,3,p)" names stand for the generated families
KnotSpec canonical(const KnotSpec& spec) {
  auto nm = std::get_if<Named>(&spec.body);
  if (!nm) return spec;
  static const std::regex torus(R"(T\((-?\d{1,6}),(-?\d{1,6})\))");
  static const std::regex pretzel(R"(P\(-2,3,(-?\d{1,6})\))");
  std::smatch m;
  KnotSpec out;
  out.mirrored = spec.mirrored;
  if (std::regex_match(nm->name, m, torus)) {
    out.body = Torus{std::stol(m[1]), std::stol(m[2])};
    return out;
  }
  if (std::regex_match(nm->name, m, pretzel)) {
    out.body = Pretzel237{std::stol(m[1])};
    return out;
  }
  return spec;
}

std::vector<Integer> integral(const std::vector<Rational>& v, const char* what) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integer(x)) throw InternalError(std::string("non-integral ") + what + " degree " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

FitEvidence evidence(DegreeKind kind, std::vector<Integer> samples, const FitOptions& options) {
  FitEvidence e;
  e.kind = kind;
  e.fit = fit(samples, options);
  e.slopes = estimate_cluster_slopes(samples, e.fit.qp);
  integrality_check(e.fit.qp);
  e.samples = std::move(samples);
  return e;
}

Rational diameter(const std::set<Rational>& js, const std::set<Rational>& js_star) {
  Rational best = 0;
  for (const auto& s : js) {
    for (const auto& t : js_star) best = std::max<Rational>(best, abs(s - t));
  }
  return best;
}

int pretzel_span(long p) { return static_cast<int>(std::max({2L, std::labs(p - 3), std::labs(p)})); }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::refuted_in_window:
      return "refuted-in-window";
    case Verdict::no_data:
      return "no-data";
  }
  return "no-data";
}

int default_max_color(const KnotSpec& raw, const SequenceOptions& options) {
  KnotSpec spec = canonical(raw);
  if (std::holds_alternative<Torus>(spec.body)) return 16;
  if (auto pz = std::get_if<Pretzel237>(&spec.body)) return std::max(20, 3 * pretzel_span(pz->p) + 8);
  if (std::holds_alternative<AlternatingData>(spec.body)) return 8;
  if (auto nm = std::get_if<Named>(&spec.body); nm && !options.force_engine) {
    if (const auto* b = bundled_sequences().find(nm->name)) {
      return static_cast<int>(std::min(b->delta.size(), b->delta_star.size())) - 1;
    }
  }
  if (degree_source(spec, 0, options) == "alternating-diagram") return 8;
  return 6;
}

std::string knot_label(const KnotSpec& raw) {
  KnotSpec spec = canonical(raw);
  std::string base;
  if (auto t = std::get_if<Torus>(&spec.body)) {
    base = "T(" + std::to_string(t->a) + "," + std::to_string(t->b) + ")";
  } else if (auto pz = std::get_if<Pretzel237>(&spec.body)) {
    base = "P(-2,3," + std::to_string(pz->p) + ")";
  } else if (auto nm = std::get_if<Named>(&spec.body)) {
    base = nm->name;
  } else {
    KnotSpec bare = spec;
    bare.mirrored = false;
    base = render(bare);
  }
  return spec.mirrored ? "mirror of " + base : base;
}

std::optional<SlopeSet> lookup_boundary_slopes(const KnotSpec& raw, const BoundarySlopeTable* db, std::string* source) {
  KnotSpec spec = canonical(raw);
  const BoundarySlopeTable& table = db ? *db : bundled_slope_db();
  auto done = [&](SlopeSet s, const char* from, bool flip) -> std::optional<SlopeSet> {
    if (source) *source = from;
    return flip ? negated(s) : s;
  };
  if (auto t = std::get_if<Torus>(&spec.body)) {
    long a = std::labs(t->a);
    long b = std::labs(t->b);
    bool flip = spec.mirrored != ((t->a < 0) != (t->b < 0));
    std::string key = "T(" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + ")";
    if (const SlopeSet* s = table.find(key)) return done(*s, "slope-db", flip);
    return done({Rational(0), Rational(a * b)}, "torus", flip);
  }
  if (auto pz = std::get_if<Pretzel237>(&spec.body)) {
    if (const SlopeSet* s = table.find("P(-2,3," + std::to_string(pz->p) + ")")) return done(*s, "slope-db", spec.mirrored);
    if (pz->p >= 7 || pz->p <= -1) return done(pretzel_boundary_slopes(pz->p), "pretzel", spec.mirrored);
    return std::nullopt;
  }
  if (auto nm = std::get_if<Named>(&spec.body)) {
    if (const SlopeSet* s = table.find(nm->name)) return done(*s, "slope-db", spec.mirrored);
  }
  if (source) source->clear();
  return std::nullopt;
}

SlopeReport analyze(const KnotSpec& raw, const AnalyzeOptions& options) {
  KnotSpec spec = canonical(raw);
  SlopeReport r;
  r.knot = raw;
  r.label = knot_label(raw);
  int N = options.max_color > 0 ? options.max_color : default_max_color(spec, options.sequence);
  r.max_color = N;
  r.degree_source = degree_source(spec, N, options.sequence);

  std::vector<DegreePair> pairs = degree_pairs(spec, N, options.sequence);
  std::vector<Rational> d, ds;
  for (const auto& p : pairs) {
    d.push_back(p.delta);
    ds.push_back(p.delta_star);
  }
  r.delta = evidence(DegreeKind::max, integral(d, "max"), options.fit);
  r.delta_star = evidence(DegreeKind::min, integral(ds, "min"), options.fit);
  r.delta_period = r.delta.fit.qp.period;
  r.delta_star_period = r.delta_star.fit.qp.period;
  r.period = static_cast<int>(lcm(static_cast<long>(r.delta_period), static_cast<long>(r.delta_star_period)));
  r.js = r.delta.slopes;
  r.js_star = r.delta_star.slopes;
  r.jones_diameter = diameter(r.js, r.js_star);

  r.boundary_slopes = lookup_boundary_slopes(spec, options.slope_db, &r.boundary_source);
  r.notes.push_back("mirror slopes are tested as 2 js* in bs, like the Jones slopes");
  if (!r.boundary_slopes) {
    r.verdict = Verdict::no_data;
    r.notes.push_back("no boundary slope data for " + r.label);
    return r;
  }
  std::set<Rational> doubled;
  for (const auto& s : r.js) doubled.insert(2 * s);
  for (const auto& s : r.js_star) doubled.insert(2 * s);
  for (const auto& s : doubled) {
    if (!r.boundary_slopes->count(Slope(s))) r.missing.push_back(s);
  }
  if (r.missing.empty()) {
    r.verdict = Verdict::verified;
  } else {
    r.verdict = Verdict::refuted_in_window;
    r.notes.push_back("inclusion fails for the fit on colors 0.." + std::to_string(N) +
                      "; a longer window may change the fitted slopes");
  }
  return r;
}

std::vector<SlopeReport> analyze_all(const std::vector<KnotSpec>& specs, const AnalyzeOptions& options,
                                     unsigned threads) {
  std::vector<SlopeReport> out(specs.size());
  AnalyzeOptions inner = options;
  inner.sequence.threads = 1;
  detail::parallel_for(static_cast<int>(specs.size()), threads, [&](int i) { out[i] = analyze(specs[i], inner); });
  return out;
}

std::vector<KnotSpec> table_knots() {
  std::vector<KnotSpec> out;
  for (const auto& key : bundled_sequences().keys()) out.push_back(KnotSpec{Named{key}, false});
  return out;
}

CheckResult check_crossing_bounds(const SlopeReport& report, const DiagramStats& stats) {
  CheckResult c;
  auto fail = [&](std::string msg) {
    c.passed = false;
    c.failures.push_back(std::move(msg));
  };
  for (const auto& s : report.js) {
    if (s > stats.c_plus) fail("js " + to_string(s) + " exceeds c+ = " + std::to_string(stats.c_plus));
  }
  for (const auto& s : report.js_star) {
    if (s < -stats.c_minus) fail("js* " + to_string(s) + " is below -c- = " + std::to_string(-stats.c_minus));
  }
  long crossings = stats.c_plus + stats.c_minus;
  if (report.jones_diameter > crossings) {
    fail("Jones diameter " + to_string(report.jones_diameter) + " exceeds c = " + std::to_string(crossings));
  }
  return c;
}

AlternatingCheck check_alternating_theorems(const AlternatingData& data, int N) {
  AlternatingInvariants inv = invariants_of(data);
  AlternatingCheck out;
  auto fail = [&](std::string msg) {
    out.result.passed = false;
    out.result.failures.push_back(std::move(msg));
  };
  std::vector<Rational> d, ds;
  for (int n = 0; n <= N; ++n) {
    DegreePair p = alt_degrees(data, n);
    d.push_back(p.delta);
    ds.push_back(p.delta_star);
    SymmetrizedPair sym = alt_symmetrized(inv, n);
    if (sym.delta_minus != p.delta + p.delta_star || sym.delta_plus != p.delta - p.delta_star) {
      fail("symmetrized degrees disagree with c, w, sigma at n = " + std::to_string(n));
    }
  }
  FitOptions opt;
  FitEvidence e = evidence(DegreeKind::max, integral(d, "max"), opt);
  FitEvidence es = evidence(DegreeKind::min, integral(ds, "min"), opt);
  out.period = static_cast<int>(lcm(static_cast<long>(e.fit.qp.period), static_cast<long>(es.fit.qp.period)));
  out.js = e.slopes;
  out.js_star = es.slopes;
  out.jones_diameter = diameter(out.js, out.js_star);
  out.checkerboard = {Rational(2 * data.c_plus), Rational(-2 * data.c_minus)};
  if (out.period != 1) fail("period " + std::to_string(out.period) + " is not 1");
  if (out.js != std::set<Rational>{Rational(data.c_plus)}) fail("js = " + format_slopes(out.js) + ", expected c+");
  if (out.js_star != std::set<Rational>{Rational(-data.c_minus)}) {
    fail("js* = " + format_slopes(out.js_star) + ", expected -c-");
  }
  SlopeSet doubled;
  for (const auto& s : out.js) doubled.insert(Slope(Rational(2 * s)));
  for (const auto& s : out.js_star) doubled.insert(Slope(Rational(2 * s)));
  if (doubled != out.checkerboard) fail("doubled slopes differ from the checkerboard slopes");
  if (out.jones_diameter != inv.c) fail("Jones diameter differs from c");
  return out;
}

MutationReport mutation_comparison(const KnotSpec& k1, const KnotSpec& k2, const AnalyzeOptions& options) {
  MutationReport m;
  m.first = analyze(k1, options);
  m.second = analyze(k2, options);
  m.jones_agree = m.first.period == m.second.period && m.first.js == m.second.js && m.first.js_star == m.second.js_star;
  m.boundary_known = m.first.boundary_slopes && m.second.boundary_slopes;
  if (m.boundary_known) {
    const SlopeSet& a = *m.first.boundary_slopes;
    const SlopeSet& b = *m.second.boundary_slopes;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(m.only_first, m.only_first.end()));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::inserter(m.only_second, m.only_second.end()));
  }
  return m;
}

std::string format_slopes(const std::set<Rational>& s) {
  std::string out = "{";
  for (const auto& x : s) {
    if (out.size() > 1) out += ", ";
    out += to_string(x);
  }
  return out + "}";
}

std::string render_text(const SlopeReport& r) {
  std::ostringstream out;
  out << r.label << ": " << to_string(r.verdict) << "\n";
  out << "  degrees from " << r.degree_source << ", colors 0.." << r.max_color << "\n";
  out << "  period " << r.period << " (delta " << r.delta_period << ", delta* " << r.delta_star_period << ")\n";
  out << "  js = " << format_slopes(r.js) << ", js* = " << format_slopes(r.js_star) << ", diameter "
      << to_string(r.jones_diameter) << "\n";
  out << "  bs = " << (r.boundary_slopes ? to_string(*r.boundary_slopes) : std::string("unknown"));
  if (!r.boundary_source.empty()) out << " (" << r.boundary_source << ")";
  out << "\n";
  if (!r.missing.empty()) {
    out << "  not boundary slopes:";
    for (const auto& s : r.missing) out << ' ' << to_string(s);
    out << "\n";
  }
  for (const auto* e : {&r.delta, &r.delta_star}) {
    std::string text = describe(e->fit.qp);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    std::string indented;
    for (char ch : text) indented += ch == '\n' ? std::string("\n  ") : std::string(1, ch);
    out << "  " << (e->kind == DegreeKind::max ? "delta" : "delta*") << " via " << e->fit.route << ": " << indented
        << "\n";
  }
  return out.str();
}

std::string render_text(const MutationReport& m) {
  std::ostringstream out;
  out << render_text(m.first) << render_text(m.second);
  out << "Jones data " << (m.jones_agree ? "agree" : "differ (not mutation-consistent)") << "\n";
  if (m.boundary_known) {
    out << "boundary slopes only in " << m.first.label << ": " << to_string(m.only_first) << "\n";
    out << "boundary slopes only in " << m.second.label << ": " << to_string(m.only_second) << "\n";
  } else {
    out << "boundary slopes unknown for at least one knot\n";
  }
  return out.str();
}

}  // namespace jslope

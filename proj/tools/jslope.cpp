#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "jslope/colored_jones.hpp"
#include "jslope/error.hpp"
#include "jslope/quasifit.hpp"
#include "jslope/slope_verify.hpp"
#include "jslope/tables.hpp"

using namespace jslope;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, refuted = 1, usage = 2, resource = 3, internal = 4 };

struct Config {
  std::string knot;
  std::string compare;
  std::string input;
  std::string slope_db;
  std::string kind = "max";
  int n = 1;
  int max_n = 0;
  int max_period = 32;
  int max_transient = 8;
  std::size_t limit_mb = 0;
  bool json = false;
  bool all = false;
  bool force_engine = false;
};

Json rational_json(const Rational& r) { return to_string(r); }

Json slopes_json(const std::set<Rational>& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(rational_json(x));
  return a;
}

Json slope_set_json(const SlopeSet& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(x.to_string());
  return a;
}

Json qp_json(const QuasiPolynomial& qp) {
  Json classes = Json::array();
  for (int r = 0; r < qp.period; ++r) {
    const auto& c = qp.classes[r];
    classes.push_back({{"residue", r},
                       {"c2", rational_json(c.c2)},
                       {"c1", rational_json(c.c1)},
                       {"c0", rational_json(c.c0)},
                       {"slope", rational_json(2 * c.c2)}});
  }
  return {{"period", qp.period}, {"transient", qp.transient}, {"classes", classes}, {"slopes", slopes_json(slopes(qp))}};
}

Json fit_json(const FitResult& f) {
  Json fractions = Json::array();
  for (const auto& p : f.expansion.fractions) {
    fractions.push_back({{"factor", p.factor == 1 ? std::string("1 - z") : "Phi_" + std::to_string(p.factor)},
                         {"multiplicity", p.multiplicity},
                         {"numerator", p.numerator.to_string()}});
  }
  return {{"route", f.route},
          {"samples", f.samples},
          {"quasi_polynomial", qp_json(f.qp)},
          {"generating_function", f.gf.to_string()},
          {"polynomial_part", f.expansion.polynomial_part.to_string()},
          {"partial_fractions", fractions}};
}

Json evidence_json(const FitEvidence& e) {
  Json samples = Json::array();
  for (const auto& v : e.samples) samples.push_back(to_string(v));
  return {{"kind", to_string(e.kind)},
          {"sample_range", {0, static_cast<int>(e.samples.size()) - 1}},
          {"samples", samples},
          {"fit", fit_json(e.fit)},
          {"cluster_slopes", slopes_json(e.slopes)}};
}

Json report_json(const SlopeReport& r) {
  Json bs = r.boundary_slopes ? slope_set_json(*r.boundary_slopes) : Json("unknown");
  Json missing = Json::array();
  for (const auto& m : r.missing) missing.push_back(rational_json(m));
  return {{"knot", render(r.knot)},
          {"label", r.label},
          {"degree_source", r.degree_source},
          {"max_color", r.max_color},
          {"period", r.period},
          {"delta_period", r.delta_period},
          {"delta_star_period", r.delta_star_period},
          {"js", slopes_json(r.js)},
          {"js_star", slopes_json(r.js_star)},
          {"jones_diameter", rational_json(r.jones_diameter)},
          {"boundary_slopes", bs},
          {"boundary_source", r.boundary_source},
          {"conjecture_verdict", to_string(r.verdict)},
          {"not_boundary_slopes", missing},
          {"evidence", {{"delta", evidence_json(r.delta)}, {"delta_star", evidence_json(r.delta_star)}}},
          {"notes", r.notes}};
}

Json check_json(const CheckResult& c) { return {{"passed", c.passed}, {"failures", c.failures}}; }

SequenceOptions sequence_options(const Config& c) {
  SequenceOptions o;
  o.limits.max_memory_mb = c.limit_mb;
  o.force_engine = c.force_engine;
  return o;
}

FitOptions fit_options(const Config& c) {
  FitOptions f;
  f.max_period = c.max_period;
  f.max_transient = c.max_transient;
  return f;
}

std::optional<BoundarySlopeTable> slope_db_of(const Config& c) {
  if (c.slope_db.empty()) return std::nullopt;
  return load_slope_db(c.slope_db);
}

AnalyzeOptions analyze_options(const Config& c, const std::optional<BoundarySlopeTable>& db) {
  AnalyzeOptions o;
  o.sequence = sequence_options(c);
  o.fit = fit_options(c);
  o.slope_db = db ? &*db : nullptr;
  o.max_color = c.max_n;
  return o;
}

KnotSpec knot_of(const Config& c) {
  if (c.knot.empty()) throw ParseError("a knot spec is required");
  return parse_knot(c.knot);
}

void emit(const Config& c, const Json& j, const std::string& text) {
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_compute(const Config& c) {
  KnotSpec k = knot_of(c);
  EngineLimits limits;
  limits.max_memory_mb = c.limit_mb;
  LaurentPoly j = colored_jones(k, c.n, limits);
  emit(c, {{"knot", render(k)}, {"n", c.n}, {"polynomial", j.to_string()}}, j.to_string() + "\n");
  return ok;
}

int cmd_degrees(const Config& c) {
  KnotSpec k = knot_of(c);
  DegreeKind kind = parse_degree_kind(c.kind);
  int N = c.max_n > 0 ? c.max_n : default_max_color(k, sequence_options(c));
  DegreeSequence seq = degree_sequence(k, kind, N, sequence_options(c));
  Json values = Json::array();
  std::string text;
  for (const auto& v : seq.values) {
    values.push_back(rational_json(v));
    text += to_string(v) + "\n";
  }
  emit(c, {{"knot", render(k)}, {"kind", to_string(kind)}, {"source", degree_source(k, N, sequence_options(c))}, {"values", values}},
       text);
  return ok;
}

std::vector<Integer> samples_of(const Config& c, std::string* origin) {
  if (!c.input.empty()) {
    *origin = c.input;
    return load_sequence(c.input);
  }
  KnotSpec k = knot_of(c);
  DegreeKind kind = parse_degree_kind(c.kind);
  int N = c.max_n > 0 ? c.max_n : default_max_color(k, sequence_options(c));
  *origin = render(k) + " " + to_string(kind);
  std::vector<Integer> out;
  for (const auto& v : degree_sequence(k, kind, N, sequence_options(c)).values) {
    if (!is_integer(v)) throw DomainError("degree " + to_string(v) + " is not an integer");
    out.push_back(v.get_num());
  }
  return out;
}

int cmd_fit(const Config& c) {
  std::string origin;
  auto seq = samples_of(c, &origin);
  FitResult f = fit(seq, fit_options(c));
  integrality_check(f.qp);
  Json j = fit_json(f);
  j["input"] = origin;
  emit(c, j, describe(f.qp) + "\ngenerating function " + f.gf.to_string() + "\nroute " + f.route + "\n");
  return ok;
}

int cmd_slopes(const Config& c) {
  if (!c.input.empty()) {
    std::string origin;
    auto seq = samples_of(c, &origin);
    FitResult f = fit(seq, fit_options(c));
    auto s = estimate_cluster_slopes(seq, f.qp);
    emit(c, {{"input", origin}, {"period", f.qp.period}, {"slopes", slopes_json(s)}},
         "period " + std::to_string(f.qp.period) + ", slopes " + format_slopes(s) + "\n");
    return ok;
  }
  std::optional<BoundarySlopeTable> db;
  SlopeReport r = analyze(knot_of(c), analyze_options(c, db));
  emit(c,
       {{"knot", render(r.knot)},
        {"period", r.period},
        {"delta_period", r.delta_period},
        {"js", slopes_json(r.js)},
        {"js_star", slopes_json(r.js_star)},
        {"jones_diameter", rational_json(r.jones_diameter)}},
       r.label + ": period " + std::to_string(r.period) + ", js " + format_slopes(r.js) + ", js* " +
           format_slopes(r.js_star) + ", diameter " + to_string(r.jones_diameter) + "\n");
  return ok;
}

int cmd_verify(const Config& c) {
  auto db = slope_db_of(c);
  AnalyzeOptions opt = analyze_options(c, db);
  std::vector<SlopeReport> reports;
  if (c.all) {
    reports = analyze_all(table_knots(), opt);
  } else {
    reports.push_back(analyze(knot_of(c), opt));
  }
  bool any_refuted = false;
  std::size_t verified = 0;
  Json arr = Json::array();
  std::string text;
  for (const auto& r : reports) {
    any_refuted |= r.verdict == Verdict::refuted_in_window;
    verified += r.verdict == Verdict::verified;
    arr.push_back(report_json(r));
    text += render_text(r);
  }
  if (c.all) text += std::to_string(verified) + "/" + std::to_string(reports.size()) + " verified\n";
  emit(c, c.all ? Json{{"reports", arr}, {"verified", verified}, {"total", reports.size()}} : arr[0], text);
  return any_refuted ? refuted : ok;
}

std::optional<PdCode> diagram_for(const KnotSpec& k) {
  if (auto d = std::get_if<Diagram>(&k.body)) return d->pd;
  if (auto nm = std::get_if<Named>(&k.body)) return knot_table().pd(nm->name);
  if (auto pz = std::get_if<Pretzel237>(&k.body)) return pretzel_pd({-2, 3, pz->p});
  if (auto t = std::get_if<Torus>(&k.body)) return torus_pd(t->a, t->b);
  return std::nullopt;
}

int cmd_report(const Config& c) {
  auto db = slope_db_of(c);
  AnalyzeOptions opt = analyze_options(c, db);
  KnotSpec k = knot_of(c);
  if (!c.compare.empty()) {
    MutationReport m = mutation_comparison(k, parse_knot(c.compare), opt);
    emit(c,
         {{"first", report_json(m.first)},
          {"second", report_json(m.second)},
          {"jones_agree", m.jones_agree},
          {"boundary_known", m.boundary_known},
          {"only_first", slope_set_json(m.only_first)},
          {"only_second", slope_set_json(m.only_second)}},
         render_text(m));
    return ok;
  }
  SlopeReport r = analyze(k, opt);
  Json j = report_json(r);
  std::string text = render_text(r);
  std::optional<AlternatingData> alt;
  if (auto a = std::get_if<AlternatingData>(&k.body)) alt = *a;
  if (auto pd = diagram_for(k)) {
    PdCode d = k.mirrored ? mirror_pd(*pd) : *pd;
    DiagramStats st = smoothing_counts(d);
    CheckResult b = check_crossing_bounds(r, st);
    j["crossing_bounds"] = check_json(b);
    j["diagram"] = {{"c_plus", st.c_plus}, {"c_minus", st.c_minus}, {"a_circles", st.a_circles},
                    {"b_circles", st.b_circles}, {"a_adequate", st.a_adequate}, {"b_adequate", st.b_adequate}};
    text += "  crossing bounds (c+ = " + std::to_string(st.c_plus) + ", c- = " + std::to_string(st.c_minus) +
            "): " + (b.passed ? "hold" : "violated") + "\n";
    for (const auto& f : b.failures) text += "    " + f + "\n";
    alt = reduced_alternating_data(d);
  }
  if (alt) {
    AlternatingCheck a = check_alternating_theorems(*alt, std::max(r.max_color, 8));
    j["alternating"] = {{"check", check_json(a.result)}, {"checkerboard_slopes", slope_set_json(a.checkerboard)}};
    text += "  alternating theorems: " + std::string(a.result.passed ? "hold" : "fail") + ", checkerboard slopes " +
            to_string(a.checkerboard) + "\n";
    for (const auto& f : a.result.failures) text += "    " + f + "\n";
  }
  emit(c, j, text);
  return r.verdict == Verdict::refuted_in_window ? refuted : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones degrees, Jones slopes and boundary slope checks"};
  app.require_subcommand(1);
  Config c;

  auto knot_opt = [&](CLI::App* s) { s->add_option("knot,--knot", c.knot, "torus:a,b | pretzel:-2,3,p | alt:c+,c-,A,B | pd:[...] | name:key, optionally prefixed by mirror:"); };
  auto fit_opts = [&](CLI::App* s) {
    s->add_option("--max-period", c.max_period, "largest period searched")->check(CLI::PositiveNumber);
    s->add_option("--max-transient", c.max_transient, "largest transient searched")->check(CLI::NonNegativeNumber);
  };
  auto engine_opts = [&](CLI::App* s) {
    s->add_option("--limit-mb", c.limit_mb, "memory ceiling for the bracket engine in MiB (0 = none)");
    s->add_flag("--force-engine", c.force_engine, "recompute named knots even when bundled degrees exist");
  };
  auto db_opt = [&](CLI::App* s) { s->add_option("--slope-db,--seed-db", c.slope_db, "boundary slope table overriding the bundled rows"); };

  auto* compute = app.add_subcommand("compute", "print J_{K,n}(q)");
  knot_opt(compute);
  compute->add_option("--n", c.n, "color")->check(CLI::NonNegativeNumber);
  compute->add_option("--limit-mb", c.limit_mb, "memory ceiling for the bracket engine in MiB (0 = none)");

  auto* degrees = app.add_subcommand("degrees", "print a degree sequence for n = 0..N");
  knot_opt(degrees);
  degrees->add_option("--max-n", c.max_n, "largest color")->check(CLI::NonNegativeNumber);
  degrees->add_option("--kind", c.kind, "max, min, span or sum");
  engine_opts(degrees);

  auto* fitc = app.add_subcommand("fit", "fit a quasi-polynomial to a sequence file or a knot's degrees");
  knot_opt(fitc);
  fitc->add_option("--input", c.input, "one integer per line, '#' comments");
  fitc->add_option("--max-n", c.max_n, "largest color when fitting a knot")->check(CLI::NonNegativeNumber);
  fitc->add_option("--kind", c.kind, "max, min, span or sum");
  fit_opts(fitc);
  engine_opts(fitc);

  auto* slopesc = app.add_subcommand("slopes", "Jones slopes, period and diameter");
  knot_opt(slopesc);
  slopesc->add_option("--input", c.input, "fit this sequence file instead of a knot");
  slopesc->add_option("--max-n", c.max_n, "largest color")->check(CLI::NonNegativeNumber);
  fit_opts(slopesc);
  engine_opts(slopesc);

  auto* verify = app.add_subcommand("verify", "check 2 js and 2 js* against the boundary slopes");
  knot_opt(verify);
  verify->add_flag("--all", c.all, "every knot with bundled degree sequences");
  verify->add_option("--max-n", c.max_n, "largest color")->check(CLI::NonNegativeNumber);
  db_opt(verify);
  fit_opts(verify);
  engine_opts(verify);

  auto* report = app.add_subcommand("report", "full slope report with crossing bounds and alternating checks");
  knot_opt(report);
  report->add_option("--compare", c.compare, "second knot for a mutation comparison");
  report->add_option("--max-n", c.max_n, "largest color")->check(CLI::NonNegativeNumber);
  db_opt(report);
  fit_opts(report);
  engine_opts(report);

  for (auto* s : {compute, degrees, fitc, slopesc, verify, report}) s->add_flag("--json", c.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*compute) return cmd_compute(c);
    if (*degrees) return cmd_degrees(c);
    if (*fitc) return cmd_fit(c);
    if (*slopesc) return cmd_slopes(c);
    if (*verify) {
      if (c.all == !c.knot.empty()) throw ParseError("verify takes either --knot or --all");
      return cmd_verify(c);
    }
    if (*report) return cmd_report(c);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const FitError& e) {
    std::cerr << "fit failed: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}

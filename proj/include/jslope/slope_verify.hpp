#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jslope/colored_jones.hpp"
#include "jslope/knot.hpp"
#include "jslope/number.hpp"
#include "jslope/quasifit.hpp"
#include "jslope/tables.hpp"

namespace jslope {

enum class Verdict { verified, refuted_in_window, no_data };

/// "verified", "refuted-in-window", "no-data".
std::string to_string(Verdict v);

/// One fitted degree sequence together with the window it was fitted on.
struct FitEvidence {
  DegreeKind kind = DegreeKind::max;
  std::vector<Integer> samples;  // n = 0..samples.size()-1
  FitResult fit;
  std::set<Rational> slopes;  // cluster points, checked against the samples
};

struct SlopeReport {
  KnotSpec knot;
  std::string label;
  std::string degree_source;
  int max_color = 0;
  int period = 1;  // lcm of the two fitted periods
  int delta_period = 1;
  int delta_star_period = 1;
  std::set<Rational> js;
  std::set<Rational> js_star;
  Rational jones_diameter;
  std::optional<SlopeSet> boundary_slopes;
  std::string boundary_source;  // "slope-db", "torus", "pretzel" or "" when unknown
  Verdict verdict = Verdict::no_data;
  /// Doubled slopes that are not boundary slopes.
  std::vector<Rational> missing;
  FitEvidence delta;
  FitEvidence delta_star;
  std::vector<std::string> notes;
};

struct AnalyzeOptions {
  SequenceOptions sequence;
  FitOptions fit;
  /// Consulted before the built-in rules; nullptr uses the bundled rows.
  const BoundarySlopeTable* slope_db = nullptr;
  /// 0 picks default_max_color.
  int max_color = 0;
};

/// Torus 16, pretzels enough colors for three periods past the transient (at least 20),
/// bundled sequences their full length, alternating data 8, diagrams 6.
int default_max_color(const KnotSpec& spec, const SequenceOptions& options = {});

/// Short name used for slope lookup and display: "8_19", "T(3,4)", "P(-2,3,7)", ...
std::string knot_label(const KnotSpec& spec);

/// Boundary slopes from the slope table, the torus rule {0, ab} or the pretzel family;
/// nullopt when none applies. `source` receives where they came from.
std::optional<SlopeSet> lookup_boundary_slopes(const KnotSpec& spec, const BoundarySlopeTable* db = nullptr,
                                               std::string* source = nullptr);

/// Degree sequences, fits, slopes, diameter and the inclusion 2 js u 2 js* in bs.
/// Throws FitError when the window is too short and ResourceLimitError from the engines.
SlopeReport analyze(const KnotSpec& spec, const AnalyzeOptions& options = {});

/// analyze over several knots on a bounded worker pool; results keep the input order.
std::vector<SlopeReport> analyze_all(const std::vector<KnotSpec>& specs, const AnalyzeOptions& options = {},
                                     unsigned threads = 0);

/// The knots with bundled degree sequences, as named specs in key order.
std::vector<KnotSpec> table_knots();

struct CheckResult {
  bool passed = true;
  std::vector<std::string> failures;
};

/// -c- <= s* and s <= c+ for all slopes, and jones_diameter <= c.
CheckResult check_crossing_bounds(const SlopeReport& report, const DiagramStats& stats);

struct AlternatingCheck {
  CheckResult result;
  int period = 1;
  std::set<Rational> js;
  std::set<Rational> js_star;
  Rational jones_diameter;
  SlopeSet checkerboard;  // {2 c+, -2 c-}
};

/// Fits the closed-form sequences for n = 0..N and compares period, slopes, the
/// symmetrized degrees and the checkerboard slopes with the diagram counts.
AlternatingCheck check_alternating_theorems(const AlternatingData& data, int N);

struct MutationReport {
  SlopeReport first;
  SlopeReport second;
  bool jones_agree = false;  // same period, js and js*
  SlopeSet only_first;       // boundary slopes of the first knot missing from the second
  SlopeSet only_second;
  bool boundary_known = false;
};

MutationReport mutation_comparison(const KnotSpec& k1, const KnotSpec& k2, const AnalyzeOptions& options = {});

std::string format_slopes(const std::set<Rational>& s);
std::string render_text(const SlopeReport& report);
std::string render_text(const MutationReport& report);

}  // namespace jslope

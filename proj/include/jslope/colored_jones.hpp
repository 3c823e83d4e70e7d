#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jslope/closed_forms.hpp"
#include "jslope/knot.hpp"
#include "jslope/laurent_poly.hpp"
#include "jslope/number.hpp"

namespace jslope {

/// Budget for the cabled bracket sweep. Exceeding either cap raises
/// ResourceLimitError instead of exhausting memory.
struct EngineLimits {
  std::size_t max_states = 4'000'000;   // distinct frontier states alive at once
  std::size_t max_frontier_points = 160;  // cabled strands crossing the frontier
  /// Rough memory ceiling in MiB; 0 disables the check.
  std::size_t max_memory_mb = 0;
};

/// Colored Jones polynomial of the torus knot T(a,b) by Morton's formula.
/// Negative b yields the mirror image. Throws DomainError for non-coprime pairs.
LaurentPoly morton_colored_jones(long a, long b, int n);

/// Colored Jones polynomial from a planar diagram, normalized so the unknot is 1.
LaurentPoly bracket_colored_jones(const PdCode& pd, int n, const EngineLimits& limits = {});

/// Colored Jones polynomial of a connected sum, given the two factors at the same color.
LaurentPoly connected_sum(const LaurentPoly& f, const LaurentPoly& g);

/// Dispatches on the knot kind: Morton for torus knots, the bracket engine for
/// diagrams, named knots and (-2,3,p) pretzels. Alternating data carries no
/// diagram, so asking for its polynomial is a DomainError.
LaurentPoly colored_jones(const KnotSpec& spec, int n, const EngineLimits& limits = {});

enum class DegreeKind { max, min, span, sum };

std::string to_string(DegreeKind kind);
/// "max", "min", "span", "sum"; throws ParseError otherwise.
DegreeKind parse_degree_kind(const std::string& text);

struct DegreeSequence {
  DegreeKind kind = DegreeKind::max;
  std::vector<Rational> values;  // index n = 0..N
};

/// Picks one degree statistic out of a nonzero polynomial.
Rational degree_of(const LaurentPoly& f, DegreeKind kind);

struct SequenceOptions {
  EngineLimits limits;
  /// Worker threads for independent colors; 0 uses the hardware concurrency.
  unsigned threads = 0;
  /// Recompute named knots with the engine even when bundled degree data covers N.
  bool force_engine = false;
};

/// values[n] for n = 0..N. Alternating data, reduced alternating diagrams and
/// (-2,3,p) pretzels use the closed forms, named knots with bundled degree data
/// use it, everything else runs an engine.
DegreeSequence degree_sequence(const KnotSpec& spec, DegreeKind kind, int N, const SequenceOptions& options = {});

/// Crossing and circle counts of a reduced alternating diagram, or nullopt when the
/// diagram is not alternating or not adequate.
std::optional<AlternatingData> reduced_alternating_data(const PdCode& pd);

/// (max degree, min degree) for n = 0..N with the same dispatch as degree_sequence.
std::vector<DegreePair> degree_pairs(const KnotSpec& spec, int N, const SequenceOptions& options = {});

/// Which source degree_pairs draws on: "alternating", "torus", "pretzel", "bundled",
/// "alternating-diagram" or "bracket".
std::string degree_source(const KnotSpec& spec, int N, const SequenceOptions& options = {});

}  // namespace jslope

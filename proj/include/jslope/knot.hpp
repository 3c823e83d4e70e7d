#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace jslope {

/// One crossing in planar-diagram notation: edge labels listed counterclockwise,
/// starting from the incoming under-strand.
struct Crossing {
  std::array<int, 4> legs{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

using PdCode = std::vector<Crossing>;

struct Torus {
  long a = 2;
  long b = 3;  // negative b encodes the mirror image
  friend bool operator==(const Torus&, const Torus&) = default;
};

/// The (-2, 3, p) pretzel knot, p odd.
struct Pretzel237 {
  long p = 7;
  friend bool operator==(const Pretzel237&, const Pretzel237&) = default;
};

/// Crossing and circle counts of a reduced alternating diagram.
struct AlternatingData {
  long c_plus = 0;
  long c_minus = 0;
  long a_circles = 1;
  long b_circles = 1;
  friend bool operator==(const AlternatingData&, const AlternatingData&) = default;
};

struct Diagram {
  PdCode pd;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct Named {
  std::string name;
  friend bool operator==(const Named&, const Named&) = default;
};

/// Tagged knot description. Torus and alternating data carry chirality in their
/// fields; the remaining kinds use the `mirrored` flag.
struct KnotSpec {
  std::variant<Torus, Pretzel237, AlternatingData, Diagram, Named> body;
  bool mirrored = false;
  friend bool operator==(const KnotSpec&, const KnotSpec&) = default;
};

/// Grammar: [mirror:](torus:a,b | pretzel:-2,3,p | alt:c+,c-,A,B | pd:[(a,b,c,d),...] | name:key)
/// Named keys are checked against the bundled knot table. Throws ParseError/DomainError.
KnotSpec parse_knot(std::string_view text);
std::string render(const KnotSpec& spec);

/// Mirror image, kept in normal form (torus b negated, alternating counts swapped).
KnotSpec mirror(const KnotSpec& spec);

AlternatingData mirror(const AlternatingData& d);

/// Parses "[(1,5,2,4),(3,1,4,6)]" or "[[1,5,2,4],...]" (also accepts X[...] tuples).
PdCode parse_pd(std::string_view text);
std::string render_pd(const PdCode& pd);

/// Sign and orientation data obtained by walking the single component once.
struct DiagramTrace {
  std::vector<int> signs;             // +1 / -1 per crossing
  std::vector<bool> over_enters_d;    // over strand travels from leg 3 to leg 1
  bool alternating = true;
  /// Legs visited in traversal order: (crossing, entry leg).
  std::vector<std::pair<int, int>> walk;
};

/// Validates that the code describes a closed, connected, single-component
/// 4-valent diagram consistent with the incoming-under convention. Throws DomainError.
DiagramTrace trace_diagram(const PdCode& pd);

struct DiagramStats {
  long c_plus = 0;
  long c_minus = 0;
  long writhe = 0;
  long a_circles = 1;
  long b_circles = 1;
  /// No crossing joins a circle of the all-A (all-B) state to itself.
  bool a_adequate = true;
  bool b_adequate = true;
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

DiagramStats smoothing_counts(const PdCode& pd);

/// Mirror diagram: swaps over and under at every crossing.
PdCode mirror_pd(const PdCode& pd);

/// Closure of a braid word on `strands` strands; generator +i is sigma_i, -i its inverse.
PdCode braid_closure_pd(int strands, const std::vector<int>& word);

/// Torus knot T(a,b) as the closure of (sigma_1 ... sigma_{a-1})^b.
PdCode torus_pd(long a, long b);

/// Pretzel diagram with vertical twist regions of the given signed lengths.
PdCode pretzel_pd(const std::vector<long>& twists);

/// Validates AlternatingData against |A| + |B| = c + 2.
void validate(const AlternatingData& d);

}  // namespace jslope

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jslope/knot.hpp"
#include "jslope/number.hpp"

namespace jslope {

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// A boundary slope: a rational number or the meridian slope infinity.
/// No arithmetic is defined on Slope; use finite() to get at the number.
class Slope {
 public:
  Slope(const Rational& r) : v_(r) {}  // NOLINT(google-explicit-constructor)
  Slope(Infinity) : v_(Infinity{}) {}  // NOLINT(google-explicit-constructor)

  bool is_infinite() const { return std::holds_alternative<Infinity>(v_); }
  /// The rational value, or nullopt for infinity.
  std::optional<Rational> finite() const;
  /// Negated slope (mirror image); infinity is fixed.
  Slope negated() const;

  std::string to_string() const;
  static Slope parse(std::string_view text);

  friend bool operator==(const Slope& a, const Slope& b);
  friend bool operator<(const Slope& a, const Slope& b);

 private:
  std::variant<Rational, Infinity> v_;
};

using SlopeSet = std::set<Slope>;

std::string to_string(const SlopeSet& s);
SlopeSet negated(const SlopeSet& s);

/// Bundled planar diagrams keyed by knot name. Besides the listed keys, the
/// families "T(a,b)" and "P(p1,...,pk)" resolve to generated diagrams.
class KnotTable {
 public:
  static KnotTable parse(std::string_view text);
  static KnotTable load(const std::string& path);

  bool contains(const std::string& name) const;
  /// Throws DomainError for unknown names.
  PdCode pd(const std::string& name) const;
  std::vector<std::string> keys() const;

 private:
  std::map<std::string, PdCode> entries_;
};

/// The bundled knot table (data/knots.tsv compiled in).
const KnotTable& knot_table();

/// Map from knot name to its set of boundary slopes.
class BoundarySlopeTable {
 public:
  /// Format: "key<TAB>slope,slope,..." with "inf" for infinity and '#' comments.
  /// Throws ParseError (bad slope, bad line) or DomainError (duplicate/unknown key, empty set).
  static BoundarySlopeTable parse(std::string_view text);

  const SlopeSet* find(const std::string& name) const;
  std::vector<std::string> keys() const;
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::string, SlopeSet> rows_;
};

BoundarySlopeTable load_slope_db(const std::string& path);
/// The bundled boundary-slope rows (data/slopes.tsv compiled in).
const BoundarySlopeTable& bundled_slope_db();

/// Degree sequences shipped with the library for knots whose diagrams are too
/// large to recompute quickly at the colors a fit needs.
struct BundledSequences {
  std::vector<long> delta;       // deg J_{K,n}, n = 0..
  std::vector<long> delta_star;  // mindeg J_{K,n}, n = 0..
};

class SequenceTable {
 public:
  /// Format: "key<TAB>max|min<TAB>v0,v1,...".
  static SequenceTable parse(std::string_view text);
  const BundledSequences* find(const std::string& name) const;
  std::vector<std::string> keys() const;

 private:
  std::map<std::string, BundledSequences> rows_;
};

const SequenceTable& bundled_sequences();

/// Raw text of the compiled-in data files.
std::string_view bundled_knots_text();
std::string_view bundled_slopes_text();
std::string_view bundled_sequences_text();

}  // namespace jslope

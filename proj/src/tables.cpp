#include "jslope/tables.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "jslope/error.hpp"

namespace jslope {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits data-file text into (line number, key, remainder) records, skipping
// blank lines and '#' comments.
struct Record {
  int line;
  std::string key;
  std::string rest;
};

std::vector<Record> records(std::string_view text) {
  std::vector<Record> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      std::size_t split = 0;
      while (split < line.size() && !std::isspace(static_cast<unsigned char>(line[split]))) ++split;
      out.push_back({line_no, std::string(line.substr(0, split)), std::string(trim(line.substr(split)))});
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "T(3,4)" / "P(-2,3,7)" family names; nullopt if the name is not a family.
std::optional<PdCode> family_pd(const std::string& name) {
  if (name.size() < 4 || name[1] != '(' || name.back() != ')') return std::nullopt;
  if (name[0] != 'T' && name[0] != 'P') return std::nullopt;
  std::vector<long> args;
  std::string_view inner(name.data() + 2, name.size() - 3);
  std::size_t start = 0;
  while (true) {
    auto comma = inner.find(',', start);
    std::string_view tok = trim(inner.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::size_t i = (tok.size() && tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) return std::nullopt;
    for (std::size_t j = i; j < tok.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(tok[j]))) return std::nullopt;
    }
    if (tok.size() > 9) return std::nullopt;
    args.push_back(std::stol(std::string(tok)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    if (name[0] == 'T') {
      if (args.size() != 2) return std::nullopt;
      return torus_pd(args[0], args[1]);
    }
    return pretzel_pd(args);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Rational> Slope::finite() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  return std::nullopt;
}

Slope Slope::negated() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return Slope(Rational(-*r));
  return *this;
}

std::string Slope::to_string() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return jslope::to_string(*r);
  return "inf";
}

Slope Slope::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "infinity" || s == "∞") return Slope(Infinity{});
  return Slope(parse_rational(s));
}

bool operator==(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return *a.finite() == *b.finite();
}

bool operator<(const Slope& a, const Slope& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.finite() < *b.finite();
}

std::string to_string(const SlopeSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    first = false;
    out += x.to_string();
  }
  return out + "}";
}

SlopeSet negated(const SlopeSet& s) {
  SlopeSet out;
  for (const auto& x : s) out.insert(x.negated());
  return out;
}

KnotTable KnotTable::parse(std::string_view text) {
  KnotTable t;
  for (const auto& r : records(text)) {
    std::string_view rest = r.rest;
    if (rest.substr(0, 3) != "pd:") {
      throw ParseError("knot table line " + std::to_string(r.line) + ": expected 'pd:[...]'");
    }
    PdCode pd = parse_pd(rest.substr(3));
    try {
      trace_diagram(pd);
    } catch (const DomainError& e) {
      throw DomainError("knot table line " + std::to_string(r.line) + " (" + r.key + "): " + e.what());
    }
    if (!t.entries_.emplace(r.key, std::move(pd)).second) {
      throw DomainError("duplicate knot key '" + r.key + "' in knot table");
    }
  }
  return t;
}

KnotTable KnotTable::load(const std::string& path) { return parse(read_file(path)); }

bool KnotTable::contains(const std::string& name) const {
  return entries_.count(name) > 0 || family_pd(name).has_value();
}

PdCode KnotTable::pd(const std::string& name) const {
  if (auto it = entries_.find(name); it != entries_.end()) return it->second;
  if (auto fam = family_pd(name)) return *fam;
  throw DomainError("unknown knot name '" + name + "'");
}

std::vector<std::string> KnotTable::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

const KnotTable& knot_table() {
  static const KnotTable table = KnotTable::parse(bundled_knots_text());
  return table;
}

BoundarySlopeTable BoundarySlopeTable::parse(std::string_view text) {
  BoundarySlopeTable t;
  for (const auto& r : records(text)) {
    SlopeSet set;
    std::string_view rest = r.rest;
    std::size_t start = 0;
    while (true) {
      auto comma = rest.find(',', start);
      std::string_view tok = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      try {
        set.insert(Slope::parse(tok));
      } catch (const ParseError&) {
        throw ParseError("slope table line " + std::to_string(r.line) + ": unparseable slope '" +
                         std::string(trim(tok)) + "'");
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (set.empty()) throw DomainError("slope table line " + std::to_string(r.line) + ": empty slope set");
    if (!knot_table().contains(r.key)) {
      throw DomainError("slope table line " + std::to_string(r.line) + ": knot '" + r.key +
                        "' is not in the knot table");
    }
    if (!t.rows_.emplace(r.key, std::move(set)).second) {
      throw DomainError("duplicate knot key '" + r.key + "' in slope table");
    }
  }
  return t;
}

const SlopeSet* BoundarySlopeTable::find(const std::string& name) const {
  auto it = rows_.find(name);
  return it == rows_.end() ? nullptr : &it->second;
}

std::vector<std::string> BoundarySlopeTable::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : rows_) out.push_back(k);
  return out;
}

BoundarySlopeTable load_slope_db(const std::string& path) { return BoundarySlopeTable::parse(read_file(path)); }

const BoundarySlopeTable& bundled_slope_db() {
  static const BoundarySlopeTable table = BoundarySlopeTable::parse(bundled_slopes_text());
  return table;
}

SequenceTable SequenceTable::parse(std::string_view text) {
  SequenceTable t;
  for (const auto& r : records(text)) {
    std::istringstream in(r.rest);
    std::string kind;
    std::string values;
    in >> kind >> values;
    if (kind != "max" && kind != "min") {
      throw ParseError("sequence table line " + std::to_string(r.line) + ": kind must be max or min");
    }
    std::vector<long> seq;
    std::size_t start = 0;
    while (start < values.size()) {
      auto comma = values.find(',', start);
      std::string tok = values.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      seq.push_back(static_cast<long>(parse_rational(tok).get_num().get_si()));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    auto& row = t.rows_[r.key];
    auto& target = kind == "max" ? row.delta : row.delta_star;
    if (!target.empty()) throw DomainError("duplicate sequence row for '" + r.key + "'");
    target = std::move(seq);
  }
  return t;
}

const BundledSequences* SequenceTable::find(const std::string& name) const {
  auto it = rows_.find(name);
  return it == rows_.end() ? nullptr : &it->second;
}

std::vector<std::string> SequenceTable::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : rows_) out.push_back(k);
  return out;
}

const SequenceTable& bundled_sequences() {
  static const SequenceTable table = SequenceTable::parse(bundled_sequences_text());
  return table;
}

}  // namespace jslope

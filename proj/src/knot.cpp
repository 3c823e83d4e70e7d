#include "jslope/knot.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "jslope/error.hpp"
#include "jslope/tables.hpp"

namespace jslope {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view text, std::string_view context) {
  std::string_view s = trim(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected an integer in '" + std::string(context) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError("expected an integer in '" + std::string(context) + "', got '" + std::string(s) + "'");
    }
  }
  if (s.size() - i > 15) throw ParseError("integer out of range in '" + std::string(context) + "'");
  return std::stol(std::string(s));
}

std::vector<long> parse_long_list(std::string_view text, std::string_view context) {
  std::vector<long> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_long(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start),
                             context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// A crossing in a diagram under construction: edge ids counterclockwise, and
// which opposite pair of legs forms the over-strand.
struct PlanarCrossing {
  std::array<int, 4> edges{};
  bool over_02 = false;
};

// Orients the single component, relabels edges 1..2c along the orientation and
// emits incoming-under-first PD tuples.
PdCode orient_planar(const std::vector<PlanarCrossing>& xs) {
  if (xs.empty()) return {};
  std::map<int, std::vector<std::pair<int, int>>> occurrences;
  for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
    for (int l = 0; l < 4; ++l) occurrences[xs[x].edges[l]].emplace_back(x, l);
  }
  for (const auto& [e, occ] : occurrences) {
    if (occ.size() != 2) throw DomainError("diagram edge does not have exactly two ends");
  }
  std::map<int, int> label;
  std::vector<int> under_in(xs.size(), -1);
  int x = 0;
  int entry = 0;
  int next_label = 1;
  std::size_t steps = 0;
  do {
    const PlanarCrossing& c = xs[x];
    bool on_over = c.over_02 ? (entry % 2 == 0) : (entry % 2 == 1);
    if (!on_over) under_in[x] = entry;
    int exit = (entry + 2) % 4;
    int e = c.edges[exit];
    if (label.count(e)) throw DomainError("diagram has a component that revisits an edge");
    label[e] = next_label++;
    const auto& occ = occurrences[e];
    auto other = occ[0] == std::make_pair(x, exit) ? occ[1] : occ[0];
    x = other.first;
    entry = other.second;
    if (++steps > 2 * xs.size()) throw DomainError("diagram traversal did not close");
  } while (!(x == 0 && entry == 0));
  if (steps != 2 * xs.size()) throw DomainError("diagram has more than one component");
  PdCode pd;
  pd.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    int u = under_in[i];
    Crossing cr;
    for (int j = 0; j < 4; ++j) cr.legs[j] = label.at(xs[i].edges[(u + j) % 4]);
    pd.push_back(cr);
  }
  return pd;
}

}  // namespace

PdCode parse_pd(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("PD code must be enclosed in [ ]: '" + std::string(text) + "'");
  }
  s = trim(s.substr(1, s.size() - 2));
  PdCode pd;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    if (i >= s.size()) break;
    if (s[i] == 'X') ++i;
    char open = i < s.size() ? s[i] : '\0';
    char close = open == '(' ? ')' : open == '[' ? ']' : '\0';
    if (close == '\0') throw ParseError("expected '(' or '[' in PD code '" + std::string(text) + "'");
    auto end = s.find(close, i);
    if (end == std::string_view::npos) throw ParseError("unterminated crossing in PD code");
    auto vals = parse_long_list(s.substr(i + 1, end - i - 1), text);
    if (vals.size() != 4) throw ParseError("PD crossing must have four labels");
    Crossing c;
    for (int k = 0; k < 4; ++k) c.legs[k] = static_cast<int>(vals[k]);
    pd.push_back(c);
    i = end + 1;
  }
  return pd;
}

std::string render_pd(const PdCode& pd) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (i) out << ',';
    const auto& l = pd[i].legs;
    out << '(' << l[0] << ',' << l[1] << ',' << l[2] << ',' << l[3] << ')';
  }
  out << ']';
  return out.str();
}

DiagramTrace trace_diagram(const PdCode& pd) {
  DiagramTrace t;
  if (pd.empty()) return t;
  std::map<int, std::vector<std::pair<int, int>>> occurrences;
  for (int x = 0; x < static_cast<int>(pd.size()); ++x) {
    for (int l = 0; l < 4; ++l) occurrences[pd[x].legs[l]].emplace_back(x, l);
  }
  for (const auto& [label, occ] : occurrences) {
    if (occ.size() != 2) {
      throw DomainError("PD label " + std::to_string(label) + " occurs " + std::to_string(occ.size()) +
                        " times; every edge needs exactly two ends");
    }
  }
  t.signs.assign(pd.size(), 0);
  t.over_enters_d.assign(pd.size(), false);
  std::vector<int> visits(pd.size(), 0);
  int x = 0;
  int entry = 0;
  int last_kind = -1;  // 0 under, 1 over
  int first_kind = -1;
  std::size_t steps = 0;
  do {
    if (entry == 2) throw DomainError("PD crossing " + std::to_string(x) + " has its under-strand entering at the third leg");
    int kind = entry == 0 ? 0 : 1;
    if (kind == 1) {
      t.over_enters_d[x] = entry == 3;
      t.signs[x] = entry == 3 ? +1 : -1;
    }
    if (last_kind == kind) t.alternating = false;
    if (first_kind < 0) first_kind = kind;
    last_kind = kind;
    ++visits[x];
    t.walk.emplace_back(x, entry);
    int exit = (entry + 2) % 4;
    const auto& occ = occurrences[pd[x].legs[exit]];
    auto other = occ[0] == std::make_pair(x, exit) ? occ[1] : occ[0];
    x = other.first;
    entry = other.second;
    if (++steps > 2 * pd.size()) throw DomainError("PD traversal did not close");
  } while (!(x == 0 && entry == 0));
  if (last_kind == first_kind) t.alternating = false;
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (visits[i] != 2) throw DomainError("PD code is disconnected or has more than one component");
  }
  return t;
}

DiagramStats smoothing_counts(const PdCode& pd) {
  DiagramStats st;
  if (pd.empty()) return st;
  DiagramTrace t = trace_diagram(pd);
  for (int s : t.signs) (s > 0 ? st.c_plus : st.c_minus)++;
  st.writhe = st.c_plus - st.c_minus;
  std::map<int, int> index;
  for (const auto& c : pd) {
    for (int l : c.legs) index.emplace(l, static_cast<int>(index.size()));
  }
  auto count_circles = [&](bool a_smoothing, bool& adequate) {
    Dsu dsu(index.size());
    long comps = static_cast<long>(index.size());
    for (const auto& c : pd) {
      const auto& l = c.legs;
      // A joins (0,1),(2,3); B joins (0,3),(1,2).
      if (a_smoothing) {
        comps -= dsu.unite(index[l[0]], index[l[1]]);
        comps -= dsu.unite(index[l[2]], index[l[3]]);
      } else {
        comps -= dsu.unite(index[l[0]], index[l[3]]);
        comps -= dsu.unite(index[l[1]], index[l[2]]);
      }
    }
    for (const auto& c : pd) {
      const auto& l = c.legs;
      if (dsu.find(index[l[0]]) == dsu.find(index[l[2]])) adequate = false;
    }
    return comps;
  };
  st.a_circles = count_circles(true, st.a_adequate);
  st.b_circles = count_circles(false, st.b_adequate);
  return st;
}

PdCode mirror_pd(const PdCode& pd) {
  DiagramTrace t = trace_diagram(pd);
  PdCode out;
  out.reserve(pd.size());
  for (std::size_t i = 0; i < pd.size(); ++i) {
    const auto& l = pd[i].legs;
    Crossing c;
    if (t.over_enters_d[i]) {
      c.legs = {l[3], l[0], l[1], l[2]};
    } else {
      c.legs = {l[1], l[2], l[3], l[0]};
    }
    out.push_back(c);
  }
  return out;
}

PdCode braid_closure_pd(int strands, const std::vector<int>& word) {
  if (strands < 1) throw DomainError("braid needs at least one strand");
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : word) {
    int i = std::abs(g);
    if (g == 0 || i >= strands) throw DomainError("braid generator out of range");
    std::swap(perm[i - 1], perm[i]);
  }
  if (strands == 1 && word.empty()) return {};
  // single cycle <=> closure is a knot
  std::vector<int> where(strands);
  for (int p = 0; p < strands; ++p) where[perm[p]] = p;
  int cur = 0;
  int len = 0;
  do {
    cur = where[cur];
    ++len;
  } while (cur != 0);
  if (len != strands) throw DomainError("braid closure is not a knot");

  int next_id = strands;
  std::vector<int> pos_edge(strands);
  std::iota(pos_edge.begin(), pos_edge.end(), 0);
  std::vector<PlanarCrossing> xs;
  for (int g : word) {
    int i = std::abs(g) - 1;
    PlanarCrossing c;
    int top_left = next_id++;
    int top_right = next_id++;
    c.edges = {pos_edge[i], pos_edge[i + 1], top_right, top_left};
    c.over_02 = g > 0;
    pos_edge[i] = top_left;
    pos_edge[i + 1] = top_right;
    xs.push_back(c);
  }
  Dsu dsu(next_id);
  for (int p = 0; p < strands; ++p) dsu.unite(pos_edge[p], p);
  for (auto& c : xs) {
    for (int& e : c.edges) e = dsu.find(e);
  }
  return orient_planar(xs);
}

PdCode torus_pd(long a, long b) {
  long aa = std::labs(a);
  long bb = std::labs(b);
  if (aa < 2 || bb < 2 || std::gcd(aa, bb) != 1) throw DomainError("torus knot needs coprime a,b >= 2");
  std::vector<int> word;
  int sign = (a < 0) != (b < 0) ? -1 : 1;
  for (long k = 0; k < bb; ++k) {
    for (long i = 1; i < aa; ++i) word.push_back(sign * static_cast<int>(i));
  }
  return braid_closure_pd(static_cast<int>(aa), word);
}

PdCode pretzel_pd(const std::vector<long>& twists) {
  if (twists.empty()) throw DomainError("pretzel needs at least one twist region");
  struct Region {
    int bl, br, tl, tr;
  };
  int next_id = 0;
  std::vector<PlanarCrossing> xs;
  std::vector<std::pair<int, int>> glue;
  std::vector<Region> regions;
  for (long t : twists) {
    Region r{};
    long m = std::labs(t);
    if (m == 0) {
      r.bl = r.tl = next_id++;
      r.br = r.tr = next_id++;
    } else {
      int left = next_id++;
      int right = next_id++;
      r.bl = left;
      r.br = right;
      for (long j = 0; j < m; ++j) {
        PlanarCrossing c;
        int tl = next_id++;
        int tr = next_id++;
        c.edges = {left, right, tr, tl};
        c.over_02 = t > 0;
        xs.push_back(c);
        left = tl;
        right = tr;
      }
      r.tl = left;
      r.tr = right;
    }
    regions.push_back(r);
  }
  std::size_t k = regions.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    glue.emplace_back(regions[i].tr, regions[i + 1].tl);
    glue.emplace_back(regions[i].br, regions[i + 1].bl);
  }
  glue.emplace_back(regions[0].tl, regions[k - 1].tr);
  glue.emplace_back(regions[0].bl, regions[k - 1].br);
  Dsu dsu(next_id);
  for (auto [u, v] : glue) {
    if (!dsu.unite(u, v)) throw DomainError("pretzel diagram has a free loop component");
  }
  for (auto& c : xs) {
    for (int& e : c.edges) e = dsu.find(e);
  }
  if (xs.empty()) throw DomainError("pretzel diagram without crossings");
  return orient_planar(xs);
}

void validate(const AlternatingData& d) {
  if (d.c_plus < 0 || d.c_minus < 0 || d.a_circles < 1 || d.b_circles < 1) {
    throw DomainError("alternating data must have non-negative crossing counts and positive circle counts");
  }
  if (d.a_circles + d.b_circles != d.c_plus + d.c_minus + 2) {
    throw DomainError("alternating data violates |A| + |B| = c + 2");
  }
  if ((d.a_circles - 1 - d.c_plus) % 2 != 0) {
    throw DomainError("alternating data gives an odd signature |A| - 1 - c+");
  }
}

AlternatingData mirror(const AlternatingData& d) { return {d.c_minus, d.c_plus, d.b_circles, d.a_circles}; }

KnotSpec mirror(const KnotSpec& spec) {
  KnotSpec out = spec;
  if (auto* t = std::get_if<Torus>(&out.body)) {
    t->b = -t->b;
  } else if (auto* a = std::get_if<AlternatingData>(&out.body)) {
    *a = mirror(*a);
  } else {
    out.mirrored = !out.mirrored;
  }
  return out;
}

KnotSpec parse_knot(std::string_view text) {
  std::string_view s = trim(text);
  bool mirrored = false;
  while (s.substr(0, 7) == "mirror:") {
    mirrored = !mirrored;
    s = trim(s.substr(7));
  }
  auto colon = s.find(':');
  if (colon == std::string_view::npos) throw ParseError("knot spec needs a 'kind:' prefix: '" + std::string(text) + "'");
  std::string_view kind = trim(s.substr(0, colon));
  std::string_view rest = trim(s.substr(colon + 1));
  KnotSpec spec;
  if (kind == "torus") {
    auto v = parse_long_list(rest, text);
    if (v.size() != 2) throw ParseError("torus spec needs two integers: '" + std::string(text) + "'");
    Torus t{v[0], v[1]};
    if (t.a < 0) {
      t.a = -t.a;
      t.b = -t.b;
    }
    if (std::labs(t.a) < 2 || std::labs(t.b) < 2) throw DomainError("torus knot needs |a|,|b| >= 2");
    if (std::gcd(t.a, std::labs(t.b)) != 1) throw DomainError("torus knot needs gcd(a,b) = 1");
    spec.body = t;
  } else if (kind == "pretzel") {
    auto v = parse_long_list(rest, text);
    if (v.size() != 3 || v[0] != -2 || v[1] != 3) {
      throw ParseError("pretzel spec must be 'pretzel:-2,3,p': '" + std::string(text) + "'");
    }
    if (v[2] % 2 == 0) throw DomainError("pretzel (-2,3,p) needs odd p");
    spec.body = Pretzel237{v[2]};
  } else if (kind == "alt") {
    auto v = parse_long_list(rest, text);
    if (v.size() != 4) throw ParseError("alt spec needs four integers: '" + std::string(text) + "'");
    AlternatingData d{v[0], v[1], v[2], v[3]};
    validate(d);
    spec.body = d;
  } else if (kind == "pd") {
    Diagram d{parse_pd(rest)};
    trace_diagram(d.pd);
    spec.body = d;
  } else if (kind == "name") {
    std::string name(rest);
    if (!knot_table().contains(name)) throw DomainError("unknown knot name '" + name + "'");
    spec.body = Named{name};
  } else {
    throw ParseError("unknown knot kind '" + std::string(kind) + "'");
  }
  return mirrored ? mirror(spec) : spec;
}

std::string render(const KnotSpec& spec) {
  std::ostringstream out;
  if (spec.mirrored) out << "mirror:";
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Torus>) {
          out << "torus:" << b.a << ',' << b.b;
        } else if constexpr (std::is_same_v<T, Pretzel237>) {
          out << "pretzel:-2,3," << b.p;
        } else if constexpr (std::is_same_v<T, AlternatingData>) {
          out << "alt:" << b.c_plus << ',' << b.c_minus << ',' << b.a_circles << ',' << b.b_circles;
        } else if constexpr (std::is_same_v<T, Diagram>) {
          out << "pd:" << render_pd(b.pd);
        } else {
          out << "name:" << b.name;
        }
      },
      spec.body);
  return out.str();
}

}  // namespace jslope

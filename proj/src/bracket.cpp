// Colored Jones polynomials from planar diagrams.
//
// Every edge of the diagram is replaced by n parallel strands carrying a
// Jones-Wenzl idempotent; one idempotent on a closed knot can be split and slid
// onto every edge. Skein elements are evaluated in the tensor representation
// of the Temperley-Lieb algebra on V = <+, ->. On a cable the idempotent's image
// is spanned by one vector v_m per weight m = 0..n (m strands labelled -), so a
// frontier state is a tuple of cable weights.
//
// The diagram is drawn as a Morse picture: a disk that grows upwards, with a
// row of cables on top. A crossing is absorbed by cups, one cabled crossing of
// two neighbouring cables, and caps; cables are carried around the bottom of
// the disk to bring a crossing's legs together. Cables on which the knot runs
// downwards use the basis dual to the cap pairing, which keeps every matrix
// entry a Laurent polynomial in the Kauffman variable A.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "jslope/colored_jones.hpp"
#include "jslope/error.hpp"

namespace jslope {

namespace {

struct Overflow {};

// int64 with overflow detection; the computation is rerun with GMP integers on overflow.
struct CheckedOps {
  using T = std::int64_t;
  static void add_mul(T& acc, T x, T y) {
    T p;
    if (__builtin_mul_overflow(x, y, &p) || __builtin_add_overflow(acc, p, &acc)) throw Overflow{};
  }
  static bool is_zero(T x) { return x == 0; }
  static Integer to_integer(T x) { return Integer(static_cast<long>(x)); }
  static T from_long(long x) { return x; }
  static T negate(T x) {
    if (x == std::numeric_limits<T>::min()) throw Overflow{};
    return -x;
  }
  static T div_exact(T x, T y) {
    if (x % y != 0) throw InternalError("inexact coefficient division in the bracket engine");
    return x / y;
  }
};

struct BigOps {
  using T = Integer;
  static void add_mul(T& acc, const T& x, const T& y) { mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t()); }
  static bool is_zero(const T& x) { return x == 0; }
  static Integer to_integer(const T& x) { return x; }
  static T from_long(long x) { return T(x); }
  static T negate(const T& x) { return -x; }
  static T div_exact(const T& x, const T& y) {
    if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) {
      throw InternalError("inexact coefficient division in the bracket engine");
    }
    T q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
  }
};

// sum_i c[i] A^(lo + S i). Frontier coefficients only use exponents of one
// parity, so the sweep stores every second one.
template <class Ops, int S>
struct APoly {
  using C = typename Ops::T;
  std::int64_t lo = 0;
  std::vector<C> c;

  bool empty() const { return c.empty(); }

  void trim() {
    std::size_t b = 0;
    while (b < c.size() && Ops::is_zero(c[b])) ++b;
    std::size_t e = c.size();
    while (e > b && Ops::is_zero(c[e - 1])) --e;
    if (b == e) {
      c.clear();
      return;
    }
    if (b > 0 || e < c.size()) {
      c = std::vector<C>(std::make_move_iterator(c.begin() + b), std::make_move_iterator(c.begin() + e));
      lo += S * static_cast<std::int64_t>(b);
    }
  }

  // this += x * y
  void add_product(const APoly& x, const APoly& y) {
    if (x.empty() || y.empty()) return;
    std::int64_t plo = x.lo + y.lo;
    std::size_t plen = x.c.size() + y.c.size() - 1;
    if (c.empty()) {
      lo = plo;
      c.assign(plen, Ops::from_long(0));
    } else {
      if ((plo - lo) % S != 0) throw InternalError("bracket state mixes exponent classes");
      if (plo < lo) {
        std::size_t pad = static_cast<std::size_t>((lo - plo) / S);
        c.insert(c.begin(), pad, Ops::from_long(0));
        lo = plo;
      }
      std::size_t need = static_cast<std::size_t>((plo - lo) / S) + plen;
      if (need > c.size()) c.resize(need, Ops::from_long(0));
    }
    std::size_t off = static_cast<std::size_t>((plo - lo) / S);
    for (std::size_t i = 0; i < x.c.size(); ++i) {
      if (Ops::is_zero(x.c[i])) continue;
      for (std::size_t j = 0; j < y.c.size(); ++j) Ops::add_mul(c[off + i + j], x.c[i], y.c[j]);
    }
  }

  static APoly monomial(long coeff, std::int64_t e) {
    APoly p;
    p.lo = e;
    p.c.push_back(Ops::from_long(coeff));
    return p;
  }
};

template <class Ops>
using Dense = APoly<Ops, 1>;
template <class Ops>
using Poly = APoly<Ops, 2>;

template <class Ops>
Dense<Ops> times(const Dense<Ops>& x, const Dense<Ops>& y) {
  Dense<Ops> r;
  r.add_product(x, y);
  r.trim();
  return r;
}

template <class Ops>
Dense<Ops> divide_exact(Dense<Ops> num, Dense<Ops> den) {
  num.trim();
  den.trim();
  if (den.empty()) throw InternalError("division by zero in the bracket engine");
  Dense<Ops> q;
  if (num.empty()) return q;
  const std::size_t dl = den.c.size();
  if (num.c.size() < dl) throw InternalError("inexact polynomial division in the bracket engine");
  const std::size_t ql = num.c.size() - dl + 1;
  q.lo = num.lo - den.lo;
  q.c.assign(ql, Ops::from_long(0));
  for (std::size_t i = ql; i-- > 0;) {
    if (Ops::is_zero(num.c[i + dl - 1])) continue;
    q.c[i] = Ops::div_exact(num.c[i + dl - 1], den.c.back());
    auto neg = Ops::negate(q.c[i]);
    for (std::size_t j = 0; j < dl; ++j) Ops::add_mul(num.c[i + j], neg, den.c[j]);
  }
  for (const auto& x : num.c) {
    if (!Ops::is_zero(x)) throw InternalError("inexact polynomial division in the bracket engine");
  }
  q.trim();
  return q;
}

template <class Ops>
Poly<Ops> restride(const Dense<Ops>& p) {
  Poly<Ops> r;
  if (p.empty()) return r;
  r.lo = p.lo;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (i % 2 == 0) {
      r.c.push_back(p.c[i]);
    } else if (!Ops::is_zero(p.c[i])) {
      throw InternalError("bracket matrix entry mixes exponent classes");
    }
  }
  r.trim();
  return r;
}

// ---------------------------------------------------------------------------
// Cable matrices. Words are bit masks over strand positions, bit set = '-'.

template <class Ops>
using WordVec = std::map<std::uint32_t, Dense<Ops>>;

// Inversions (- before +) of an n-letter word.
int inversions(std::uint32_t w, int n) {
  int k = 0;
  int minus = 0;
  for (int i = 0; i < n; ++i) {
    if (w >> i & 1) {
      ++minus;
    } else {
      k += minus;
    }
  }
  return k;
}

// Words of v_m: every n-letter word with m minus signs, coefficient A^(2 inv).
// These span the idempotent's image, the joint kernel of the caps
// <+-| - A^-2 <-+| on neighbouring strands; v_m has coefficient 1 on +..+-..-.
std::vector<std::uint32_t> words_of_weight(int n, int m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    if (__builtin_popcount(w) == m) out.push_back(w);
  }
  return out;
}

std::uint32_t sorted_word(int n, int m) { return ((1u << m) - 1) << (n - m); }

// The elementary crossing on strands i, i+1: a + b e with e = cup . cap,
// cup = -A^2|+-> + |-+> and cap = <+-| - A^-2 <-+|.
template <class Ops>
WordVec<Ops> apply_elementary(const WordVec<Ops>& in, int i, bool horizontal_a) {
  using D = Dense<Ops>;
  const std::int64_t ea = horizontal_a ? -1 : 1;
  const std::int64_t eb = -ea;
  const D a = D::monomial(1, ea);
  const D b_pm = D::monomial(-1, eb + 2);
  const D b = D::monomial(1, eb);
  const D b_mp = D::monomial(-1, eb - 2);
  WordVec<Ops> out;
  for (const auto& [w, c] : in) {
    out[w].add_product(c, a);
    bool s = w >> i & 1;
    bool t = w >> (i + 1) & 1;
    if (s == t) continue;
    std::uint32_t pm = (w & ~(3u << i)) | (2u << i);
    std::uint32_t mp = (w & ~(3u << i)) | (1u << i);
    if (!s) {
      out[pm].add_product(c, b_pm);
      out[mp].add_product(c, b);
    } else {
      out[pm].add_product(c, b);
      out[mp].add_product(c, b_mp);
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it->second.trim();
    it = it->second.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

// Entry list of a cabled crossing: (j, k) at the bottom -> sum over j' of
// entry * (j' top-left, j + k - j' top-right).
template <class P>
using CrossMatrix = std::vector<std::vector<std::vector<std::pair<int, P>>>>;

template <class Ops>
struct Tables {
  int n = 0;
  std::vector<Dense<Ops>> pairing;  // cap pairing of v_j (left) with v_(n-j) (right)
  std::vector<Poly<Ops>> ratio;     // pairing[k] / pairing[n-k]
  std::vector<Poly<Ops>> rot_in;    // carrying a cable from the right end to the front
  std::vector<Poly<Ops>> rot_out;   // and from the front to the right end
  // [horizontal][bottom-left up][bottom-right up]
  std::array<std::array<std::array<CrossMatrix<Poly<Ops>>, 2>, 2>, 2> cross;
};

// One strand (left) crossing an n-cable: (s, m) -> (m', s') with v_m' left.
template <class Ops>
std::vector<std::vector<std::vector<std::tuple<int, int, Dense<Ops>>>>> strand_over_cable(int n, bool horizontal_a) {
  std::vector<std::vector<std::vector<std::tuple<int, int, Dense<Ops>>>>> r(2, std::vector<std::vector<std::tuple<int, int, Dense<Ops>>>>(n + 1));
  for (int s = 0; s < 2; ++s) {
    for (int m = 0; m <= n; ++m) {
      WordVec<Ops> v;
      for (std::uint32_t w : words_of_weight(n, m)) {
        v[static_cast<std::uint32_t>(s) | (w << 1)] = Dense<Ops>::monomial(1, 2 * inversions(w, n));
      }
      for (int i = 0; i < n; ++i) v = apply_elementary(v, i, horizontal_a);
      for (int m2 = 0; m2 <= n; ++m2) {
        int s2 = s + m - m2;
        if (s2 < 0 || s2 > 1) continue;
        auto it = v.find(sorted_word(n, m2) | (static_cast<std::uint32_t>(s2) << n));
        if (it != v.end()) r[s][m].emplace_back(m2, s2, it->second);
      }
    }
  }
  return r;
}

template <class Ops>
CrossMatrix<Dense<Ops>> cabled_crossing(int n, bool horizontal_a) {
  auto one = strand_over_cable<Ops>(n, horizontal_a);
  CrossMatrix<Dense<Ops>> r(n + 1, std::vector<std::vector<std::pair<int, Dense<Ops>>>>(n + 1));
  using State = std::tuple<std::uint32_t, int, std::uint32_t>;  // uncrossed strands, cable weight, crossed strands
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) {
      std::map<State, Dense<Ops>> cur;
      for (std::uint32_t w : words_of_weight(n, j)) cur[{w, k, 0u}] = Dense<Ops>::monomial(1, 2 * inversions(w, n));
      for (int i = n - 1; i >= 0; --i) {
        std::map<State, Dense<Ops>> next;
        for (const auto& [st, c] : cur) {
          auto [a, m, b] = st;
          int s = static_cast<int>(a >> i & 1);
          for (const auto& [m2, s2, e] : one[s][m]) {
            next[{a & ~(1u << i), m2, b | (static_cast<std::uint32_t>(s2) << i)}].add_product(c, e);
          }
        }
        for (auto it = next.begin(); it != next.end();) {
          it->second.trim();
          it = it->second.empty() ? next.erase(it) : std::next(it);
        }
        cur = std::move(next);
      }
      for (const auto& [st, c] : cur) {
        auto [a, m, b] = st;
        int k2 = __builtin_popcount(b);
        if (b == sorted_word(n, k2)) r[j][k].emplace_back(m, c);
      }
    }
  }
  return r;
}

template <class Ops>
Tables<Ops> make_tables(int n) {
  Tables<Ops> t;
  t.n = n;
  for (int j = 0; j <= n; ++j) {
    // nested caps: strand n-1-i of the left cable meets strand i of the right one
    Dense<Ops> p;
    for (std::uint32_t w : words_of_weight(n, j)) {
      std::uint32_t partner = 0;
      for (int i = 0; i < n; ++i) {
        if (!(w >> (n - 1 - i) & 1)) partner |= 1u << i;
      }
      // each (-,+) cap contributes -A^-2
      long sign = j % 2 == 0 ? 1 : -1;
      p.add_product(Dense<Ops>::monomial(sign, 2 * inversions(w, n) + 2 * inversions(partner, n) - 2 * j),
                    Dense<Ops>::monomial(1, 0));
    }
    p.trim();
    t.pairing.push_back(p);
  }
  for (int k = 0; k <= n; ++k) t.ratio.push_back(restride(divide_exact(t.pairing[k], t.pairing[n - k])));
  for (int m = 0; m <= n; ++m) {
    long sign = n % 2 == 0 ? 1 : -1;
    t.rot_in.push_back(Poly<Ops>::monomial(sign, 2 * (n - 2 * m)));
    t.rot_out.push_back(Poly<Ops>::monomial(sign, -2 * (n - 2 * m)));
  }
  const Dense<Ops> unit = Dense<Ops>::monomial(1, 0);
  for (int h = 0; h < 2; ++h) {
    CrossMatrix<Dense<Ops>> base = cabled_crossing<Ops>(n, h == 1);
    for (int bl = 0; bl < 2; ++bl) {
      for (int br = 0; br < 2; ++br) {
        // a downward cable of weight m uses v_m / pairing[n-m]; the bottom-left
        // strand leaves at the top right
        auto scale = [&](bool up, int m) -> const Dense<Ops>& { return up ? unit : t.pairing[n - m]; };
        auto& out = t.cross[h][bl][br];
        out.assign(n + 1, std::vector<std::vector<std::pair<int, Poly<Ops>>>>(n + 1));
        for (int j = 0; j <= n; ++j) {
          for (int k = 0; k <= n; ++k) {
            for (const auto& [j2, e] : base[j][k]) {
              int k2 = j + k - j2;
              Dense<Ops> num = times(times(e, scale(br, j2)), scale(bl, k2));
              Dense<Ops> den = times(scale(bl, j), scale(br, k));
              out[j][k].emplace_back(j2, restride(divide_exact(num, den)));
            }
          }
        }
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Sweep planning.

struct Layout {
  int crossings = 0;
  std::vector<std::array<int, 4>> edge_at;    // crossing, leg -> edge index
  std::vector<std::array<int, 2>> ends;       // edge index -> crossing at each end
  std::vector<std::array<int, 2>> end_legs;   // edge index -> leg at each end
  std::vector<std::array<bool, 4>> outgoing;  // the knot leaves the crossing through this leg
};

Layout make_layout(const PdCode& pd, const DiagramTrace& trace) {
  Layout lay;
  lay.crossings = static_cast<int>(pd.size());
  std::map<int, int> index;
  for (const auto& c : pd) {
    for (int l : c.legs) index.emplace(l, static_cast<int>(index.size()));
  }
  int edges = static_cast<int>(index.size());
  lay.edge_at.resize(pd.size());
  lay.ends.assign(edges, {-1, -1});
  lay.end_legs.assign(edges, {-1, -1});
  lay.outgoing.resize(pd.size());
  for (int x = 0; x < lay.crossings; ++x) {
    for (int l = 0; l < 4; ++l) {
      int e = index[pd[x].legs[l]];
      lay.edge_at[x][l] = e;
      int k = lay.ends[e][0] < 0 ? 0 : 1;
      lay.ends[e][k] = x;
      lay.end_legs[e][k] = l;
    }
    bool d = trace.over_enters_d[x];
    lay.outgoing[x] = {false, d, true, !d};
  }
  return lay;
}

// A cable on top of the disk: an edge whose `inside` end has been absorbed.
struct Cable {
  int edge;
  int outside;
  int outside_leg;
  bool up;  // the knot runs upwards, out of the disk
  bool operator==(const Cable&) const = default;
};

Cable leg_cable(const Layout& lay, int x, int leg) {
  int e = lay.edge_at[x][leg];
  int j = (lay.ends[e][0] == x && lay.end_legs[e][0] == leg) ? 1 : 0;
  return {e, lay.ends[e][j], lay.end_legs[e][j], lay.outgoing[x][leg]};
}

enum class OpKind : std::uint8_t { cross, cup, cap, rotate_in, rotate_out };

// rotate_in carries the last cable around the disk to the front, rotate_out the
// first cable to the end.
struct Op {
  OpKind kind;
  int pos = 0;
  bool horizontal = false;  // cross: the A-smoothing joins the two bottom legs
  bool left_up = false;     // cross, cup, cap: type of the left cable
  bool right_up = false;    // cross: type of the right cable
};

struct Frontier {
  std::vector<Cable> cables;
  std::vector<Op>* ops = nullptr;
  int widest = 0;

  void emit(Op op) {
    if (ops) ops->push_back(op);
    widest = std::max(widest, static_cast<int>(cables.size()));
  }
  void rotate_in() {
    std::rotate(cables.rbegin(), cables.rbegin() + 1, cables.rend());
    emit({OpKind::rotate_in});
  }
  void rotate_out() {
    std::rotate(cables.begin(), cables.begin() + 1, cables.end());
    emit({OpKind::rotate_out});
  }
  void cup(int pos, Cable left, Cable right) {
    cables.insert(cables.begin() + pos, {left, right});
    emit({OpKind::cup, pos, false, left.up});
  }
  void cross(int pos, bool horizontal, Cable top_left, Cable top_right) {
    Op op{OpKind::cross, pos, horizontal, cables[pos].up, cables[pos + 1].up};
    if (top_left.up != op.right_up || top_right.up != op.left_up) throw InternalError("cable orientation mismatch");
    cables[pos] = top_left;
    cables[pos + 1] = top_right;
    emit(op);
  }
  void close_caps() {
    for (;;) {
      const int f = static_cast<int>(cables.size());
      int found = -1;
      for (int i = 0; i + 1 < f || (f > 2 && i < f); ++i) {
        if (cables[i].edge == cables[(i + 1) % f].edge) {
          found = i;
          break;
        }
      }
      if (found < 0) return;
      if (found == f - 1) {
        rotate_in();
        found = 0;
      }
      if (cables[found].up == cables[found + 1].up) throw InternalError("cap joins cables of equal orientation");
      Op op{OpKind::cap, found, false, cables[found].up};
      cables.erase(cables.begin() + found, cables.begin() + found + 2);
      emit(op);
    }
  }

  // Absorbs crossing x, or returns false if its legs on the frontier are not a
  // run of consecutive cables in counterclockwise order around x.
  bool absorb(const Layout& lay, int x, int start_leg) {
    auto C = [&](int leg) { return leg_cable(lay, x, leg % 4); };
    // a bottom leg of x runs upwards into x when the knot enters through it
    auto bottom = [&](int leg) {
      Cable c = C(leg);
      c.up = !c.up;
      return c;
    };
    const int f = static_cast<int>(cables.size());
    if (f == 0) {
      int l = start_leg;
      cup(0, C(l), bottom(l));
      cup(2, bottom(l + 1), C(l + 1));
      cross(1, l % 2 == 0, C(l + 3), C(l + 2));
      close_caps();
      return true;
    }
    std::vector<int> at;
    for (int i = 0; i < f; ++i) {
      if (cables[i].outside == x) at.push_back(i);
    }
    const int k = static_cast<int>(at.size());
    if (k == 0) return false;
    int p = -1;
    for (int s : at) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const Cable& c = cables[(s + i) % f];
        ok = c.outside == x && c.outside_leg == (cables[s].outside_leg + i) % 4;
      }
      if (ok) {
        p = s;
        break;
      }
    }
    if (p < 0) return false;
    const int l = cables[p].outside_leg;
    if (p + k > f) {
      if (p <= f - p) {
        for (int i = 0; i < p; ++i) rotate_out();
      } else {
        for (int i = 0; i < f - p; ++i) rotate_in();
      }
      p = 0;
    }
    if (k == 1) {
      cup(p + 1, bottom(l + 1), C(l + 1));
    }
    cross(p, l % 2 == 0, C(l + 3), C(l + 2));
    close_caps();
    return true;
  }
};

struct SweepPlan {
  std::vector<Op> ops;
  int widest = 0;
  double cost = 0;
};

bool plan_from(const Layout& lay, int start, int start_leg, SweepPlan& plan) {
  Frontier fr;
  fr.ops = &plan.ops;
  std::vector<char> done(lay.crossings, 0);
  fr.absorb(lay, start, start_leg);
  done[start] = 1;
  plan.cost += std::pow(5.0, static_cast<double>(fr.cables.size()));
  for (int step = 1; step < lay.crossings; ++step) {
    int best = -1;
    std::size_t best_size = 0;
    int best_wide = 0;
    for (int x = 0; x < lay.crossings; ++x) {
      if (done[x]) continue;
      Frontier trial;
      trial.cables = fr.cables;
      if (!trial.absorb(lay, x, 0)) continue;
      if (best < 0 || trial.cables.size() < best_size ||
          (trial.cables.size() == best_size && trial.widest < best_wide)) {
        best = x;
        best_size = trial.cables.size();
        best_wide = trial.widest;
      }
    }
    if (best < 0) return false;
    fr.absorb(lay, best, 0);
    done[best] = 1;
    plan.cost += std::pow(5.0, static_cast<double>(fr.cables.size()));
  }
  if (!fr.cables.empty()) return false;
  plan.widest = fr.widest;
  return true;
}

SweepPlan plan_sweep(const Layout& lay) {
  SweepPlan best;
  bool found = false;
  for (int s = 0; s < lay.crossings; ++s) {
    for (int leg = 0; leg < 4; ++leg) {
      SweepPlan p;
      if (!plan_from(lay, s, leg, p)) continue;
      if (!found || p.widest < best.widest || (p.widest == best.widest && p.cost < best.cost)) {
        best = std::move(p);
        found = true;
      }
    }
  }
  if (!found) throw DomainError("diagram admits no planar sweep; is the PD code planar?");
  return best;
}

// ---------------------------------------------------------------------------
// Evaluation.

using Key = std::string;  // one weight per cable

template <class Ops>
class Sweep {
 public:
  Sweep(const Tables<Ops>& t, const EngineLimits& limits) : t_(t), limits_(limits) {
    states_.emplace(Key(), Poly<Ops>::monomial(1, 0));
  }

  void run(const Op& op) {
    const int n = t_.n;
    std::unordered_map<Key, Poly<Ops>> next;
    next.reserve(states_.size() * 2);
    auto put = [&](Key&& key, const Poly<Ops>& coeff, const Poly<Ops>& factor) {
      auto it = next.find(key);
      if (it == next.end()) {
        it = next.emplace(std::move(key), Poly<Ops>{}).first;
        if (next.size() > limits_.max_states) {
          throw ResourceLimitError("bracket sweep exceeded " + std::to_string(limits_.max_states) + " frontier states");
        }
      }
      it->second.add_product(coeff, factor);
    };
    for (const auto& [key, coeff] : states_) {
      switch (op.kind) {
        case OpKind::cross: {
          int j = key[op.pos];
          int k = key[op.pos + 1];
          for (const auto& [j2, e] : t_.cross[op.horizontal][op.left_up][op.right_up][j][k]) {
            Key nk = key;
            nk[op.pos] = static_cast<char>(j2);
            nk[op.pos + 1] = static_cast<char>(j + k - j2);
            put(std::move(nk), coeff, e);
          }
          break;
        }
        case OpKind::cup: {
          for (int m = 0; m <= n; ++m) {
            Key nk = key;
            nk.insert(nk.begin() + op.pos, {static_cast<char>(m), static_cast<char>(n - m)});
            put(std::move(nk), coeff, op.left_up ? t_.ratio[m] : unit_);
          }
          break;
        }
        case OpKind::cap: {
          int j = key[op.pos];
          if (j + key[op.pos + 1] != n) break;
          Key nk = key;
          nk.erase(op.pos, 2);
          put(std::move(nk), coeff, op.left_up ? unit_ : t_.ratio[j]);
          break;
        }
        case OpKind::rotate_in: {
          int m = key.back();
          Key nk = key.back() + key.substr(0, key.size() - 1);
          put(std::move(nk), coeff, t_.rot_in[m]);
          break;
        }
        case OpKind::rotate_out: {
          int m = key.front();
          Key nk = key.substr(1) + key.front();
          put(std::move(nk), coeff, t_.rot_out[m]);
          break;
        }
      }
    }
    std::size_t terms = 0;
    for (auto it = next.begin(); it != next.end();) {
      it->second.trim();
      if (it->second.empty()) {
        it = next.erase(it);
      } else {
        terms += it->second.c.size();
        ++it;
      }
    }
    if (limits_.max_memory_mb > 0) {
      std::size_t width = next.empty() ? 0 : next.begin()->first.size();
      std::size_t bytes = next.size() * (64 + width) + terms * (sizeof(typename Ops::T) + 8);
      if (bytes / (1024 * 1024) > limits_.max_memory_mb) {
        throw ResourceLimitError("bracket sweep exceeded the memory limit of " + std::to_string(limits_.max_memory_mb) +
                                 " MiB");
      }
    }
    states_ = std::move(next);
  }

  Poly<Ops> closed_value() const {
    auto it = states_.find(Key());
    if (states_.size() > 1 || (it == states_.end() && !states_.empty())) {
      throw InternalError("bracket sweep ended with open cables");
    }
    return it == states_.end() ? Poly<Ops>{} : it->second;
  }

 private:
  const Tables<Ops>& t_;
  EngineLimits limits_;
  const Poly<Ops> unit_ = Poly<Ops>::monomial(1, 0);
  std::unordered_map<Key, Poly<Ops>> states_;
};

// Bracket of the closed diagram divided by that of the idempotent-decorated
// unknot, (-1)^n (A^(2n+2) - A^(-2n-2)) / (A^2 - A^-2).
template <class Ops>
Dense<Ops> normalized_bracket(const SweepPlan& plan, int n, const EngineLimits& limits) {
  Tables<Ops> tables = make_tables<Ops>(n);
  Sweep<Ops> sweep(tables, limits);
  for (const Op& op : plan.ops) sweep.run(op);
  Poly<Ops> closed = sweep.closed_value();
  Dense<Ops> value;
  value.lo = closed.lo;
  for (std::size_t i = 0; i < closed.c.size(); ++i) {
    if (i > 0) value.c.push_back(Ops::from_long(0));
    value.c.push_back(closed.c[i]);
  }
  Dense<Ops> unknot;
  unknot.lo = -2 * n;
  unknot.c.assign(4 * n + 1, Ops::from_long(0));
  for (int i = 0; i <= n; ++i) unknot.c[4 * i] = Ops::from_long(n % 2 == 0 ? 1 : -1);
  return divide_exact(value, unknot);
}

template <class Ops>
LaurentPoly assemble(const Dense<Ops>& lambda, int n, long writhe) {
  // framing: each positive kink on an idempotent-decorated n-cable is (-1)^n A^(n^2+2n)
  std::int64_t shift = -writhe * static_cast<std::int64_t>(n) * (n + 2);
  bool negate = (static_cast<long>(n) * writhe) % 2 != 0;
  LaurentPoly out;
  for (std::size_t i = 0; i < lambda.c.size(); ++i) {
    if (Ops::is_zero(lambda.c[i])) continue;
    std::int64_t e = lambda.lo + static_cast<std::int64_t>(i) + shift;
    Integer c = Ops::to_integer(lambda.c[i]);
    if (negate) c = -c;
    out.add_term(-e, c);  // A = q^(-1/4)
  }
  if (!out.is_integral()) throw InternalError("bracket result has non-integral exponents");
  return out;
}

}  // namespace

LaurentPoly bracket_colored_jones(const PdCode& pd, int n, const EngineLimits& limits) {
  if (n < 0) throw DomainError("color must be non-negative");
  DiagramTrace trace = trace_diagram(pd);
  if (n == 0 || pd.empty()) return LaurentPoly(1);
  if (n > 12) throw ResourceLimitError("bracket engine supports colors up to 12");
  long writhe = std::accumulate(trace.signs.begin(), trace.signs.end(), 0L);
  SweepPlan plan = plan_sweep(make_layout(pd, trace));
  if (static_cast<std::size_t>(plan.widest) * static_cast<std::size_t>(n) > limits.max_frontier_points) {
    throw ResourceLimitError("bracket frontier needs " + std::to_string(plan.widest * n) +
                             " strands, above the limit of " + std::to_string(limits.max_frontier_points));
  }
  try {
    return assemble(normalized_bracket<CheckedOps>(plan, n, limits), n, writhe);
  } catch (const Overflow&) {
    return assemble(normalized_bracket<BigOps>(plan, n, limits), n, writhe);
  }
}

}  // namespace jslope

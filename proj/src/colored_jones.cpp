#include "jslope/colored_jones.hpp"

#include <optional>

#include "jslope/error.hpp"
#include "jslope/tables.hpp"
#include "parallel.hpp"

namespace jslope {

namespace {

PdCode diagram_of(const KnotSpec& spec) {
  if (auto d = std::get_if<Diagram>(&spec.body)) return d->pd;
  if (auto nm = std::get_if<Named>(&spec.body)) return knot_table().pd(nm->name);
  if (auto pz = std::get_if<Pretzel237>(&spec.body)) return pretzel_pd({-2, 3, pz->p});
  if (auto t = std::get_if<Torus>(&spec.body)) return torus_pd(t->a, t->b);
  throw DomainError("alternating data carries no diagram");
}

DegreePair mirrored_pair(const DegreePair& d) { return {-d.delta_star, -d.delta}; }

const BundledSequences* bundled_for(const KnotSpec& spec, int N, const SequenceOptions& options) {
  if (options.force_engine) return nullptr;
  auto nm = std::get_if<Named>(&spec.body);
  if (!nm) return nullptr;
  const BundledSequences* b = bundled_sequences().find(nm->name);
  if (!b) return nullptr;
  if (static_cast<int>(b->delta.size()) <= N || static_cast<int>(b->delta_star.size()) <= N) return nullptr;
  return b;
}

}  // namespace

LaurentPoly colored_jones(const KnotSpec& spec, int n, const EngineLimits& limits) {
  if (n < 0) throw DomainError("color must be non-negative");
  LaurentPoly j;
  if (auto t = std::get_if<Torus>(&spec.body)) {
    j = morton_colored_jones(t->a, t->b, n);
  } else {
    j = bracket_colored_jones(diagram_of(spec), n, limits);
  }
  return spec.mirrored ? j.mirror() : j;
}

std::string to_string(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::max:
      return "max";
    case DegreeKind::min:
      return "min";
    case DegreeKind::span:
      return "span";
    case DegreeKind::sum:
      return "sum";
  }
  return "max";
}

DegreeKind parse_degree_kind(const std::string& text) {
  if (text == "max") return DegreeKind::max;
  if (text == "min") return DegreeKind::min;
  if (text == "span") return DegreeKind::span;
  if (text == "sum") return DegreeKind::sum;
  throw ParseError("unknown degree kind '" + text + "' (expected max, min, span or sum)");
}

Rational degree_of(const LaurentPoly& f, DegreeKind kind) {
  if (f.is_zero()) throw InternalError("degree of the zero polynomial");
  switch (kind) {
    case DegreeKind::max:
      return f.deg();
    case DegreeKind::min:
      return f.mindeg();
    case DegreeKind::span:
      return f.deg() - f.mindeg();
    case DegreeKind::sum:
      return f.deg() + f.mindeg();
  }
  return f.deg();
}

std::optional<AlternatingData> reduced_alternating_data(const PdCode& pd) {
  if (pd.empty()) return std::nullopt;
  if (!trace_diagram(pd).alternating) return std::nullopt;
  DiagramStats st = smoothing_counts(pd);
  if (!st.a_adequate || !st.b_adequate) return std::nullopt;
  return AlternatingData{st.c_plus, st.c_minus, st.a_circles, st.b_circles};
}

namespace {

std::optional<AlternatingData> diagram_shortcut(const KnotSpec& spec, const SequenceOptions& options) {
  if (options.force_engine) return std::nullopt;
  if (!std::holds_alternative<Named>(spec.body) && !std::holds_alternative<Diagram>(spec.body)) return std::nullopt;
  return reduced_alternating_data(diagram_of(spec));
}

}  // namespace

std::string degree_source(const KnotSpec& spec, int N, const SequenceOptions& options) {
  if (std::holds_alternative<AlternatingData>(spec.body)) return "alternating";
  if (std::holds_alternative<Torus>(spec.body)) return "torus";
  if (std::holds_alternative<Pretzel237>(spec.body)) return "pretzel";
  if (bundled_for(spec, N, options)) return "bundled";
  if (diagram_shortcut(spec, options)) return "alternating-diagram";
  return "bracket";
}

std::vector<DegreePair> degree_pairs(const KnotSpec& spec, int N, const SequenceOptions& options) {
  if (N < 0) throw DomainError("maximum color must be non-negative");
  std::vector<DegreePair> out(N + 1);
  if (auto a = std::get_if<AlternatingData>(&spec.body)) {
    for (int n = 0; n <= N; ++n) out[n] = alt_degrees(*a, n);
  } else if (auto pz = std::get_if<Pretzel237>(&spec.body)) {
    auto d = pretzel_sequence(pz->p, true, N);
    auto ds = pretzel_sequence(pz->p, false, N);
    for (int n = 0; n <= N; ++n) out[n] = {Rational(d[n]), Rational(ds[n])};
  } else if (auto b = bundled_for(spec, N, options)) {
    for (int n = 0; n <= N; ++n) out[n] = {make_rational(b->delta[n]), make_rational(b->delta_star[n])};
  } else if (auto alt = diagram_shortcut(spec, options)) {
    for (int n = 0; n <= N; ++n) out[n] = alt_degrees(*alt, n);
  } else {
    KnotSpec body = spec;
    body.mirrored = false;
    // largest colors first so the costly ones start early
    detail::parallel_for(N + 1, options.threads, [&](int i) {
      int n = N - i;
      LaurentPoly j = colored_jones(body, n, options.limits);
      out[n] = {j.deg(), j.mindeg()};
    });
  }
  if (spec.mirrored) {
    for (auto& d : out) d = mirrored_pair(d);
  }
  return out;
}

DegreeSequence degree_sequence(const KnotSpec& spec, DegreeKind kind, int N, const SequenceOptions& options) {
  DegreeSequence seq;
  seq.kind = kind;
  for (const auto& d : degree_pairs(spec, N, options)) {
    switch (kind) {
      case DegreeKind::max:
        seq.values.push_back(d.delta);
        break;
      case DegreeKind::min:
        seq.values.push_back(d.delta_star);
        break;
      case DegreeKind::span:
        seq.values.push_back(d.delta - d.delta_star);
        break;
      case DegreeKind::sum:
        seq.values.push_back(d.delta + d.delta_star);
        break;
    }
  }
  return seq;
}

}  // namespace jslope

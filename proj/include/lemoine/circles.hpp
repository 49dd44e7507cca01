#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lemoine/triangle.hpp"

namespace lemoine {

enum class CircleKind { First, Second, Third, Bui, New };

inline const char* circle_kind_name(CircleKind k) {
  switch (k) {
    case CircleKind::First: return "first";
    case CircleKind::Second: return "second";
    case CircleKind::Third: return "third";
    case CircleKind::Bui: return "bui";
    case CircleKind::New: return "new";
  }
  return "?";
}

// Canonical storage order of the six labeled points.
inline constexpr std::array<const char*, 6> kSixPointLabels = {"A_b", "A_c", "B_c",
                                                               "B_a", "C_a", "C_b"};
enum SixPointIndex { kAb = 0, kAc = 1, kBc = 2, kBa = 3, kCa = 4, kCb = 5 };

// Intermediate objects of a construction, kept for the proof-step verifiers.
template <class S>
struct ConstructionTrace {
  std::vector<Ln<S>> lines;      // through-pivot lines (First/Second), A, B, C order
  std::vector<Circ<S>> circles;  // omega_1..omega_3 (Third/Bui/New), A, B, C order
  std::optional<CevianTriple<S>> cevian;  // New only
};

template <class S>
struct SixPointCfg {
  CircleKind kind{CircleKind::First};
  Pt<S> pivot;
  std::array<Pt<S>, 6> points;  // A_b, A_c, B_c, B_a, C_a, C_b
  Circ<S> fitted;               // circle through the first non-collinear triple
  S residual{0.0};              // max radial deviation over the six points, / R
  std::optional<S> ratio;       // fitted center projected on L -> O; absent when O = L
  ConstructionTrace<S> trace;

  std::vector<Pt<S>> point_list() const { return {points.begin(), points.end()}; }
};

using SixPointConfig = SixPointCfg<double>;

namespace detail {

template <class S>
void require_interior_pivot(const TriangleCtx<S>& ctx, const Pt<S>& p) {
  const Tri<S>& t = ctx.tri;
  S s1 = cross(t.b - t.a, p - t.a);
  S s2 = cross(t.c - t.b, p - t.b);
  S s3 = cross(t.a - t.c, p - t.c);
  S lim = ctx.tol.area();
  bool pos = s1 > lim && s2 > lim && s3 > lim;
  bool neg = s1 < S(-1.0) * lim && s2 < S(-1.0) * lim && s3 < S(-1.0) * lim;
  if (!pos && !neg)
    fail(ErrorCode::DegeneratePivot, "pivot must lie strictly inside the triangle");
}

template <class S>
SixPointCfg<S> finish_config(const TriangleCtx<S>& ctx, CircleKind kind, const Pt<S>& pivot,
                             const std::array<Pt<S>, 6>& pts, ConstructionTrace<S> trace) {
  SixPointCfg<S> cfg;
  cfg.kind = kind;
  cfg.pivot = pivot;
  cfg.points = pts;
  cfg.trace = std::move(trace);
  std::vector<Pt<S>> list(pts.begin(), pts.end());
  cfg.fitted = fit_circle_first3(list, ctx.tol);
  cfg.residual = concyclicity_residual(list, ctx.circumradius, ctx.tol);
  if (!ctx.equilateral_like())
    cfg.ratio = projection_ratio(ctx.symmedian, ctx.cd.o, cfg.fitted.center, ctx.tol);
  return cfg;
}

}  // namespace detail

// Three lines through the pivot parallel to the sides; each meets the other
// two sides. At the symmedian point the six points are concyclic about the
// midpoint of LO.
template <class S>
SixPointCfg<S> first_lemoine(const TriangleCtx<S>& ctx, const Pt<S>& pivot) {
  detail::require_interior_pivot(ctx, pivot);
  const Tri<S>& t = ctx.tri;
  const Tol<S>& tol = ctx.tol;
  Ln<S> ab = line_through(t.a, t.b, tol);
  Ln<S> bc = line_through(t.b, t.c, tol);
  Ln<S> ca = line_through(t.c, t.a, tol);
  Ln<S> par_a = line_from_point_dir(pivot, t.c - t.b);  // parallel to BC
  Ln<S> par_b = line_from_point_dir(pivot, t.a - t.c);  // parallel to CA
  Ln<S> par_c = line_from_point_dir(pivot, t.b - t.a);  // parallel to AB
  std::array<Pt<S>, 6> pts;
  pts[kAb] = line_line_intersection(par_a, ab, tol);
  pts[kAc] = line_line_intersection(par_a, ca, tol);
  pts[kBc] = line_line_intersection(par_b, bc, tol);
  pts[kBa] = line_line_intersection(par_b, ab, tol);
  pts[kCa] = line_line_intersection(par_c, ca, tol);
  pts[kCb] = line_line_intersection(par_c, bc, tol);
  ConstructionTrace<S> trace;
  trace.lines = {par_a, par_b, par_c};
  return detail::finish_config(ctx, CircleKind::First, pivot, pts, std::move(trace));
}

// Three antiparallels through the pivot; at the symmedian point the six points
// are equidistant from it (the construction's circle is centered at L).
template <class S>
SixPointCfg<S> second_lemoine(const TriangleCtx<S>& ctx, const Pt<S>& pivot) {
  detail::require_interior_pivot(ctx, pivot);
  const Tri<S>& t = ctx.tri;
  const Tol<S>& tol = ctx.tol;
  Ln<S> ab = line_through(t.a, t.b, tol);
  Ln<S> bc = line_through(t.b, t.c, tol);
  Ln<S> ca = line_through(t.c, t.a, tol);
  Ln<S> anti_a = line_from_point_dir(pivot, antiparallel_direction(t, SideId::BC, VertexId::A, tol));
  Ln<S> anti_b = line_from_point_dir(pivot, antiparallel_direction(t, SideId::CA, VertexId::B, tol));
  Ln<S> anti_c = line_from_point_dir(pivot, antiparallel_direction(t, SideId::AB, VertexId::C, tol));
  std::array<Pt<S>, 6> pts;
  pts[kAb] = line_line_intersection(anti_a, ab, tol);
  pts[kAc] = line_line_intersection(anti_a, ca, tol);
  pts[kBc] = line_line_intersection(anti_b, bc, tol);
  pts[kBa] = line_line_intersection(anti_b, ab, tol);
  pts[kCa] = line_line_intersection(anti_c, ca, tol);
  pts[kCb] = line_line_intersection(anti_c, bc, tol);
  ConstructionTrace<S> trace;
  trace.lines = {anti_a, anti_b, anti_c};
  return detail::finish_config(ctx, CircleKind::Second, pivot, pts, std::move(trace));
}

// Circumcircles of B-pivot-C, C-pivot-A, A-pivot-B, re-meeting the side lines
// through the remaining vertex pairs.
template <class S>
SixPointCfg<S> third_lemoine(const TriangleCtx<S>& ctx, const Pt<S>& pivot) {
  detail::require_interior_pivot(ctx, pivot);
  const Tri<S>& t = ctx.tri;
  const Tol<S>& tol = ctx.tol;
  Circ<S> wa = circle_through_3(t.b, pivot, t.c, tol);
  Circ<S> wb = circle_through_3(t.c, pivot, t.a, tol);
  Circ<S> wc = circle_through_3(t.a, pivot, t.b, tol);
  std::array<Pt<S>, 6> pts;
  pts[kAb] = second_intersection_on_line(wa, t.b, t.a, tol);  // on AB, != B
  pts[kAc] = second_intersection_on_line(wa, t.c, t.a, tol);  // on AC, != C
  pts[kBc] = second_intersection_on_line(wb, t.c, t.b, tol);  // on BC, != C
  pts[kBa] = second_intersection_on_line(wb, t.a, t.b, tol);  // on BA, != A
  pts[kCa] = second_intersection_on_line(wc, t.a, t.c, tol);  // on CA, != A
  pts[kCb] = second_intersection_on_line(wc, t.b, t.c, tol);  // on CB, != B
  ConstructionTrace<S> trace;
  trace.circles = {wa, wb, wc};
  return detail::finish_config(ctx, CircleKind::Third, pivot, pts, std::move(trace));
}

// Per-vertex circles through {vertex, pivot} tangent to the circumcircle at
// the vertex; each cut the two sides leaving that vertex.
template <class S>
SixPointCfg<S> bui_circle(const TriangleCtx<S>& ctx, const Pt<S>& pivot) {
  detail::require_interior_pivot(ctx, pivot);
  const Tri<S>& t = ctx.tri;
  const Tol<S>& tol = ctx.tol;
  Circ<S> wa = tangent_circle_at_through(ctx.cd.omega, t.a, pivot, tol);
  Circ<S> wb = tangent_circle_at_through(ctx.cd.omega, t.b, pivot, tol);
  Circ<S> wc = tangent_circle_at_through(ctx.cd.omega, t.c, pivot, tol);
  std::array<Pt<S>, 6> pts;
  pts[kAb] = second_intersection_on_line(wa, t.a, t.b, tol);  // on AB
  pts[kAc] = second_intersection_on_line(wa, t.a, t.c, tol);  // on AC
  pts[kBc] = second_intersection_on_line(wb, t.b, t.c, tol);  // on BC
  pts[kBa] = second_intersection_on_line(wb, t.b, t.a, tol);  // on BA
  pts[kCa] = second_intersection_on_line(wc, t.c, t.a, tol);  // on CA
  pts[kCb] = second_intersection_on_line(wc, t.c, t.b, tol);  // on CB
  ConstructionTrace<S> trace;
  trace.circles = {wa, wb, wc};
  return detail::finish_config(ctx, CircleKind::Bui, pivot, pts, std::move(trace));
}

// The new construction: tangent circles at the circumcevian points A', B', C'
// through the pivot, each cutting the side line opposite the originating
// vertex in two points (ordered along the directed sides B->C, C->A, A->B).
template <class S>
SixPointCfg<S> new_circle(const TriangleCtx<S>& ctx, const Pt<S>& pivot) {
  detail::require_interior_pivot(ctx, pivot);
  const Tri<S>& t = ctx.tri;
  const Tol<S>& tol = ctx.tol;
  CevianTriple<S> cev = circumcevian_triangle(t, pivot, ctx.cd, tol);
  Circ<S> w1 = tangent_circle_at_through(ctx.cd.omega, cev.a_p, pivot, tol);
  Circ<S> w2 = tangent_circle_at_through(ctx.cd.omega, cev.b_p, pivot, tol);
  Circ<S> w3 = tangent_circle_at_through(ctx.cd.omega, cev.c_p, pivot, tol);

  auto chord_on = [&](const Circ<S>& w, const Pt<S>& from, const Pt<S>& to) {
    std::vector<Pt<S>> hits = line_circle_intersection(line_through(from, to, tol), w, tol);
    if (hits.size() != 2)
      fail(ErrorCode::NoRealIntersection, "tangent circle misses its target side line");
    if (dot(hits[1] - from, to - from) < dot(hits[0] - from, to - from))
      std::swap(hits[0], hits[1]);
    return std::pair<Pt<S>, Pt<S>>{hits[0], hits[1]};
  };
  std::array<Pt<S>, 6> pts;
  auto [ab_, ac_] = chord_on(w1, t.b, t.c);  // on BC, ordered B -> C
  auto [bc_, ba_] = chord_on(w2, t.c, t.a);  // on CA, ordered C -> A
  auto [ca_, cb_] = chord_on(w3, t.a, t.b);  // on AB, ordered A -> B
  pts[kAb] = ab_;
  pts[kAc] = ac_;
  pts[kBc] = bc_;
  pts[kBa] = ba_;
  pts[kCa] = ca_;
  pts[kCb] = cb_;
  ConstructionTrace<S> trace;
  trace.circles = {w1, w2, w3};
  trace.cevian = cev;
  return detail::finish_config(ctx, CircleKind::New, pivot, pts, std::move(trace));
}

template <class S>
SixPointCfg<S> six_point_config(const TriangleCtx<S>& ctx, CircleKind kind, const Pt<S>& pivot) {
  switch (kind) {
    case CircleKind::First: return first_lemoine(ctx, pivot);
    case CircleKind::Second: return second_lemoine(ctx, pivot);
    case CircleKind::Third: return third_lemoine(ctx, pivot);
    case CircleKind::Bui: return bui_circle(ctx, pivot);
    case CircleKind::New: return new_circle(ctx, pivot);
  }
  fail(ErrorCode::InvalidArgument, "bad circle kind");
}

template <class S>
struct SpectrumEntry {
  CircleKind kind;
  S ratio;
};

template <class S>
struct Spectrum {
  std::array<SpectrumEntry<S>, 5> entries;  // First, Second, Third, Bui, New
  S open_slot;                              // midpoint of the Second/Third centers
};

// Directed center ratios of the five constructions at L along L -> O, plus the
// open-problem slot at the midpoint of the Second and Third centers.
template <class S>
Spectrum<S> brocard_spectrum(const TriangleCtx<S>& ctx) {
  if (ctx.equilateral_like())
    fail(ErrorCode::EquilateralDegenerate, "center spectrum undefined for equilateral triangles");
  Spectrum<S> sp{};
  const std::array<CircleKind, 5> kinds = {CircleKind::First, CircleKind::Second,
                                           CircleKind::Third, CircleKind::Bui, CircleKind::New};
  for (size_t i = 0; i < kinds.size(); ++i) {
    SixPointCfg<S> cfg = six_point_config(ctx, kinds[i], ctx.symmedian);
    S t = directed_ratio_along(ctx.symmedian, ctx.cd.o, cfg.fitted.center, ctx.tol);
    sp.entries[i] = {kinds[i], t};
  }
  sp.open_slot = (sp.entries[1].ratio + sp.entries[2].ratio) / S(2.0);
  return sp;
}

}  // namespace lemoine

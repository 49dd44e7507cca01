#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lemoine/triangle.hpp"

namespace lemoine {

// Closed six-vertex chain with sides alternately antiparallel and parallel to
// the triangle's sides, seeded by B_a = B + s*(A - B).
template <class S>
struct TuckerHexagonT {
  S seed{0.5};
  std::array<Pt<S>, 6> vertices;  // B_a, C_a, C_b, A_b, A_c, B_c in chain order
  S closure_residual{0.0};        // distance from the closing line back to B_a, / R
};

template <class S>
struct TuckerSampleT {
  S seed{0.5};
  Circ<S> circle;
  std::optional<S> t;  // directed ratio of the center along L -> O
  S radius{1.0};
  S concyclicity{0.0};  // six-vertex fit residual, / R
  S axis_dist{0.0};     // center distance to the Brocard axis, / R (0 when O = L)
};

using TuckerHexagon = TuckerHexagonT<double>;
using TuckerSample = TuckerSampleT<double>;

template <class S>
TuckerHexagonT<S> tucker_hexagon(const TriangleCtx<S>& ctx, const S& s) {
  const Tri<S>& t = ctx.tri;
  const Tol<S>& tol = ctx.tol;
  Ln<S> ab = line_through(t.a, t.b, tol);
  Ln<S> bc = line_through(t.b, t.c, tol);
  Ln<S> ca = line_through(t.c, t.a, tol);

  auto step = [&](const Pt<S>& from, const Pt<S>& dir, const Ln<S>& target) {
    try {
      return line_line_intersection(line_from_point_dir(from, dir), target, tol);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParallelLines)
        fail(ErrorCode::DegenerateStep, "chain line parallel to its target side");
      throw;
    }
  };

  Pt<S> anti_a = antiparallel_direction(t, SideId::BC, VertexId::A, tol);
  Pt<S> anti_b = antiparallel_direction(t, SideId::CA, VertexId::B, tol);
  Pt<S> anti_c = antiparallel_direction(t, SideId::AB, VertexId::C, tol);

  TuckerHexagonT<S> hex;
  hex.seed = s;
  Pt<S> b_a = t.b + s * (t.a - t.b);
  Pt<S> c_a = step(b_a, anti_a, ca);         // antiparallel to BC -> AC
  Pt<S> c_b = step(c_a, t.b - t.a, bc);      // parallel to AB -> BC
  Pt<S> a_b = step(c_b, anti_b, ab);         // antiparallel to AC -> BA
  Pt<S> a_c = step(a_b, t.c - t.b, ca);      // parallel to BC -> CA
  Pt<S> b_c = step(a_c, anti_c, bc);         // antiparallel to AB -> BC
  Pt<S> closed = step(b_c, t.a - t.c, ab);   // parallel to AC -> AB, back to B_a
  hex.vertices = {b_a, c_a, c_b, a_b, a_c, b_c};
  hex.closure_residual = dist(closed, b_a) / ctx.circumradius;
  return hex;
}

template <class S>
TuckerSampleT<S> tucker_circle(const TriangleCtx<S>& ctx, const S& s) {
  TuckerHexagonT<S> hex = tucker_hexagon(ctx, s);
  std::vector<Pt<S>> pts(hex.vertices.begin(), hex.vertices.end());
  TuckerSampleT<S> sample;
  sample.seed = s;
  sample.circle = fit_circle_first3(pts, ctx.tol);
  sample.concyclicity = concyclicity_residual(pts, ctx.circumradius, ctx.tol);
  sample.radius = sample.circle.radius();
  if (!ctx.equilateral_like()) {
    sample.t = projection_ratio(ctx.symmedian, ctx.cd.o, sample.circle.center, ctx.tol);
    Ln<S> axis = brocard_axis_line(ctx.cd.o, ctx.symmedian, ctx.tol);
    sample.axis_dist = num::abs(axis.eval(sample.circle.center)) / ctx.circumradius;
  }
  return sample;
}

// --- Tucker family scan (binary64 only) -------------------------------------

struct TuckerScanOptions {
  double s_lo = -1.0;
  double s_hi = 2.0;
  int samples = 512;
  double t_tol = 1e-12;  // bisection target on |t(s) - t_target|
  int max_bisect = 200;
};

struct TuckerMatch {
  double s;
  double t;
  double radius;
};

// All seeds s in the scan window whose Tucker circle center sits at the given
// directed ratio along L -> O. TargetOutOfRange when no bracket is found.
std::vector<TuckerMatch> tucker_radius_at(const TriangleContext& ctx, double t_target,
                                          const TuckerScanOptions& opts = {});

enum class TuckerVerdictReason {
  RadiusMatch,       // on axis, radius agrees with the family's circle there
  OffAxis,           // center not on the Brocard axis
  RadiusGap,         // on axis, but no family member of that radius
  NoTuckerCircleAtT  // scan found no family circle centered at that ratio
};

struct TuckerVerdict {
  bool is_tucker = false;
  TuckerVerdictReason reason = TuckerVerdictReason::RadiusGap;
  double margin = 0.0;  // off-axis distance / R, or min radius gap / R
  double t = 0.0;       // center's directed ratio along L -> O (when on axis)
  std::vector<TuckerMatch> matches;
};

TuckerVerdict is_tucker(const TriangleContext& ctx, const Circle& c,
                        const TuckerScanOptions& opts = {});

}  // namespace lemoine

#pragma once

#include <algorithm>
#include <optional>

#include "lemoine/geom.hpp"

namespace lemoine {

template <class S>
struct Tri {
  Pt<S> a, b, c;
};

template <class S>
struct CircumData {
  Pt<S> o;
  S r2{1.0};
  Circ<S> omega;
};

// Second intersections A', B', C' of the cevians through a pivot with the
// circumcircle.
template <class S>
struct CevianTriple {
  Pt<S> a_p, b_p, c_p;
};

using Triangle = Tri<double>;

enum class SideId { BC, CA, AB };
enum class VertexId { A, B, C };

template <class S>
Pt<S> vertex(const Tri<S>& t, VertexId v) {
  switch (v) {
    case VertexId::A: return t.a;
    case VertexId::B: return t.b;
    case VertexId::C: return t.c;
  }
  fail(ErrorCode::InvalidArgument, "bad vertex id");
}

template <class S>
std::pair<Pt<S>, Pt<S>> side_endpoints(const Tri<S>& t, SideId s) {
  switch (s) {
    case SideId::BC: return {t.b, t.c};
    case SideId::CA: return {t.c, t.a};
    case SideId::AB: return {t.a, t.b};
  }
  fail(ErrorCode::InvalidArgument, "bad side id");
}

constexpr VertexId opposite_vertex(SideId s) {
  return s == SideId::BC ? VertexId::A : (s == SideId::CA ? VertexId::B : VertexId::C);
}

template <class S>
S signed_area2(const Tri<S>& t) {
  return cross(t.b - t.a, t.c - t.a);
}

template <class S>
CircumData<S> circumcircle(const Tri<S>& t, const Tol<S>& tol) {
  Circ<S> w = circle_through_3(t.a, t.b, t.c, tol);
  return {w.center, w.r2, w};
}

template <class S>
Pt<S> centroid(const Tri<S>& t) {
  return {(t.a.x + t.b.x + t.c.x) / S(3.0), (t.a.y + t.b.y + t.c.y) / S(3.0)};
}

// L = (a^2 A + b^2 B + c^2 C) / (a^2 + b^2 + c^2) with a = |BC|, b = |CA|, c = |AB|.
template <class S>
Pt<S> symmedian_point(const Tri<S>& t, const Tol<S>& tol) {
  if (num::abs(signed_area2(t)) <= tol.area())
    fail(ErrorCode::CollinearPoints, "symmedian point of a degenerate triangle");
  S a2 = dist2(t.b, t.c);
  S b2 = dist2(t.c, t.a);
  S c2 = dist2(t.a, t.b);
  S w = a2 + b2 + c2;
  return {(a2 * t.a.x + b2 * t.b.x + c2 * t.c.x) / w, (a2 * t.a.y + b2 * t.b.y + c2 * t.c.y) / w};
}

template <class S>
struct SyntheticSymmedian {
  Pt<S> point;
  bool formula_fallback = false;  // a pole was at infinity (right angle) for 2+ chords
};

// L as the intersection of vertex-to-pole lines (the pole of a chord lies on
// the symmedian through the opposite vertex). Falls back to the weighted
// formula when fewer than two poles exist.
template <class S>
SyntheticSymmedian<S> symmedian_point_synthetic(const Tri<S>& t, const Tol<S>& tol) {
  CircumData<S> cd = circumcircle(t, tol);
  std::vector<Ln<S>> symmedians;
  const std::array<std::array<Pt<S>, 3>, 3> chords = {{
      {t.a, t.b, t.c},  // vertex A, chord BC
      {t.b, t.c, t.a},  // vertex B, chord CA
      {t.c, t.a, t.b},  // vertex C, chord AB
  }};
  for (const auto& ch : chords) {
    if (symmedians.size() == 2) break;
    try {
      Pt<S> pole = pole_of_chord(cd.omega, ch[1], ch[2], tol);
      symmedians.push_back(line_through(ch[0], pole, tol));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AntipodalChord) throw;
    }
  }
  if (symmedians.size() < 2)
    return {symmedian_point(t, tol), true};
  return {line_line_intersection(symmedians[0], symmedians[1], tol), false};
}

template <class S>
Ln<S> brocard_axis_line(const Pt<S>& o, const Pt<S>& l, const Tol<S>& tol) {
  if (dist(o, l) <= tol.length())
    fail(ErrorCode::EquilateralDegenerate, "Brocard axis undefined when O and L coincide");
  return line_through(o, l, tol);
}

template <class S>
Ln<S> brocard_axis(const Tri<S>& t, const Tol<S>& tol) {
  CircumData<S> cd = circumcircle(t, tol);
  return brocard_axis_line(cd.o, symmedian_point(t, tol), tol);
}

namespace detail {

// Second root of |V + u*(p - V) - Q|^2 = rho^2 when V itself lies on the
// circle: the known root u = 0 is factored out analytically.
template <class S>
S second_root_param(const Pt<S>& on_circle, const Pt<S>& toward, const Circ<S>& w) {
  Pt<S> d = toward - on_circle;
  S len2 = norm2(d);
  if (!(len2 > S(0.0))) fail(ErrorCode::DegenerateInput, "zero direction");
  return S(-2.0) * dot(d, on_circle - w.center) / len2;
}

}  // namespace detail

// Second intersection of the line through `root` and `toward` with a circle
// passing through `root`. At a tangency the double root is `root` itself and
// is returned as such (the equilateral configurations need this limit).
template <class S>
Pt<S> second_intersection_on_line(const Circ<S>& w, const Pt<S>& root, const Pt<S>& toward,
                                  const Tol<S>& tol) {
  (void)tol;
  S u = detail::second_root_param(root, toward, w);
  return root + u * (toward - root);
}

template <class S>
CevianTriple<S> circumcevian_triangle(const Tri<S>& t, const Pt<S>& p, const CircumData<S>& cd,
                                      const Tol<S>& tol) {
  if (power_of_point(p, cd.omega) >= S(-1.0) * tol.area())
    fail(ErrorCode::PointOutsideCircle, "circumcevian pivot must be strictly inside the circumcircle");
  for (const Pt<S>* v : {&t.a, &t.b, &t.c})
    if (dist(p, *v) <= tol.length())
      fail(ErrorCode::PointAtVertex, "circumcevian pivot coincides with a vertex");
  auto second = [&](const Pt<S>& v) {
    S u = detail::second_root_param(v, p, cd.omega);
    return v + u * (p - v);
  };
  return {second(t.a), second(t.b), second(t.c)};
}

template <class S>
CevianTriple<S> circumcevian_triangle(const Tri<S>& t, const Pt<S>& p, const Tol<S>& tol) {
  return circumcevian_triangle(t, p, circumcircle(t, tol), tol);
}

// Unit direction antiparallel to `side` with respect to the opposite angle:
// the side direction reflected across the internal bisector at that vertex.
// A line with this direction cuts the two remaining sides in points concyclic
// with the side's endpoints.
template <class S>
Pt<S> antiparallel_direction(const Tri<S>& t, SideId side, VertexId at, const Tol<S>& tol) {
  if (at != opposite_vertex(side))
    fail(ErrorCode::InvalidArgument, "antiparallel vertex must be opposite the side");
  Pt<S> v = vertex(t, at);
  auto [p, q] = side_endpoints(t, side);
  Pt<S> bisector = unit(unit(p - v) + unit(q - v));
  Pt<S> d = unit(q - p);
  S proj = dot(d, bisector);
  Pt<S> reflected = (S(2.0) * proj) * bisector - d;
  (void)tol;
  return unit(reflected);
}

// Cached per-triangle data shared by the circle constructions and verifiers.
template <class S>
struct TriangleCtx {
  Tri<S> tri;
  CircumData<S> cd;
  Pt<S> symmedian;
  Pt<S> gcenter;
  S circumradius{1.0};
  Tol<S> tol;

  bool equilateral_like() const { return dist(cd.o, symmedian) <= tol.length(); }

  static TriangleCtx make(const Tri<S>& t, S eps_rel = S(kDefaultEpsRel)) {
    if (!(eps_rel > S(0.0))) fail(ErrorCode::InvalidArgument, "eps_rel must be positive");
    for (const Pt<S>* v : {&t.a, &t.b, &t.c})
      num::check_finite(v->x + v->y, "triangle vertex coordinates");
    // Bootstrap scale from the raw coordinates, then normalize to R.
    S scale0 = num::sqrt(
        std::max({num::to_double(dist2(t.a, t.b)), num::to_double(dist2(t.b, t.c)),
                  num::to_double(dist2(t.c, t.a)), 1e-300}));
    Tol<S> boot{eps_rel, scale0};
    CircumData<S> cd = circumcircle(t, boot);
    TriangleCtx ctx;
    ctx.tri = t;
    ctx.cd = cd;
    ctx.circumradius = num::sqrt(cd.r2);
    ctx.tol = Tol<S>{eps_rel, ctx.circumradius};
    ctx.symmedian = symmedian_point(t, ctx.tol);
    ctx.gcenter = centroid(t);
    return ctx;
  }
};

using TriangleContext = TriangleCtx<double>;

}  // namespace lemoine

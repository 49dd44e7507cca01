#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lemoine/error.hpp"
#include "lemoine/scalar.hpp"

namespace lemoine {

template <class S>
struct Pt {
  S x{0.0};
  S y{0.0};
};

template <class S>
Pt<S> operator+(const Pt<S>& a, const Pt<S>& b) {
  return {a.x + b.x, a.y + b.y};
}
template <class S>
Pt<S> operator-(const Pt<S>& a, const Pt<S>& b) {
  return {a.x - b.x, a.y - b.y};
}
template <class S>
Pt<S> operator*(const S& s, const Pt<S>& p) {
  return {s * p.x, s * p.y};
}

template <class S>
S dot(const Pt<S>& a, const Pt<S>& b) {
  return a.x * b.x + a.y * b.y;
}
template <class S>
S cross(const Pt<S>& a, const Pt<S>& b) {
  return a.x * b.y - a.y * b.x;
}
template <class S>
S norm2(const Pt<S>& p) {
  return dot(p, p);
}
template <class S>
S norm(const Pt<S>& p) {
  return num::sqrt(norm2(p));
}
template <class S>
S dist2(const Pt<S>& a, const Pt<S>& b) {
  return norm2(a - b);
}
template <class S>
S dist(const Pt<S>& a, const Pt<S>& b) {
  return num::sqrt(dist2(a, b));
}
template <class S>
Pt<S> midpoint(const Pt<S>& a, const Pt<S>& b) {
  return {(a.x + b.x) / S(2.0), (a.y + b.y) / S(2.0)};
}
template <class S>
Pt<S> rot90(const Pt<S>& p) {
  return {-p.y, p.x};
}
template <class S>
Pt<S> unit(const Pt<S>& p) {
  S n = norm(p);
  if (!(n > S(0.0))) fail(ErrorCode::DegenerateInput, "cannot normalize zero vector");
  return {p.x / n, p.y / n};
}

// Oriented line {p : n·p = c} with unit normal n, canonical sign
// (nx > 0) or (nx == 0 and ny > 0).
template <class S>
struct Ln {
  S nx{0.0};
  S ny{1.0};
  S c{0.0};

  // Signed distance of p from the line.
  S eval(const Pt<S>& p) const { return nx * p.x + ny * p.y - c; }
  Pt<S> normal() const { return {nx, ny}; }
  // Ordering direction for two-point intersections: the x-axis (canonical
  // normal (0,1)) yields points ordered by increasing x.
  Pt<S> direction() const { return {ny, S(-1.0) * nx}; }
};

template <class S>
struct Circ {
  Pt<S> center;
  S r2{1.0};

  S radius() const { return num::sqrt(r2); }
};

using Point = Pt<double>;
using Line = Ln<double>;
using Circle = Circ<double>;

namespace detail {

template <class S>
Ln<S> canonical_line(Pt<S> n, S c) {
  if (n.x < S(0.0) || (n.x == S(0.0) && n.y < S(0.0))) {
    n = S(-1.0) * n;
    c = -c;
  }
  num::check_finite(n.x + n.y + c, "line coefficients");
  return {n.x, n.y, c};
}

}  // namespace detail

template <class S>
Ln<S> line_from_point_dir(const Pt<S>& p, const Pt<S>& dir) {
  Pt<S> n = unit(rot90(dir));
  return detail::canonical_line(n, dot(n, p));
}

template <class S>
Ln<S> line_through(const Pt<S>& p, const Pt<S>& q, const Tol<S>& tol) {
  if (dist2(p, q) <= tol.length() * tol.length())
    fail(ErrorCode::DegenerateInput, "line through coincident points");
  return line_from_point_dir(p, q - p);
}

template <class S>
Ln<S> perpendicular_bisector(const Pt<S>& p, const Pt<S>& q, const Tol<S>& tol) {
  if (dist2(p, q) <= tol.length() * tol.length())
    fail(ErrorCode::DegenerateInput, "perpendicular bisector of coincident points");
  Pt<S> n = unit(q - p);
  return detail::canonical_line(n, dot(n, midpoint(p, q)));
}

template <class S>
Pt<S> line_line_intersection(const Ln<S>& a, const Ln<S>& b, const Tol<S>& tol) {
  // Normals are unit vectors, so det is the sine of the angle between the lines.
  S det = a.nx * b.ny - a.ny * b.nx;
  if (num::abs(det) <= tol.eps_rel) fail(ErrorCode::ParallelLines, "lines are parallel");
  Pt<S> p{(a.c * b.ny - b.c * a.ny) / det, (a.nx * b.c - b.nx * a.c) / det};
  num::check_finite(p.x + p.y, "line intersection");
  return p;
}

template <class S>
std::vector<Pt<S>> line_circle_intersection(const Ln<S>& l, const Circ<S>& w, const Tol<S>& tol) {
  S d = l.eval(w.center);
  Pt<S> foot = w.center - d * l.normal();
  S h2 = w.r2 - d * d;
  if (h2 < -tol.area()) return {};
  if (h2 <= tol.area()) return {foot};
  S h = num::sqrt(h2);
  Pt<S> dir = l.direction();
  return {foot - h * dir, foot + h * dir};
}

template <class S>
Circ<S> circle_through_3(const Pt<S>& p, const Pt<S>& q, const Pt<S>& r, const Tol<S>& tol) {
  if (num::abs(cross(q - p, r - p)) <= tol.area())
    fail(ErrorCode::CollinearPoints, "three collinear points define no circle");
  Pt<S> center = line_line_intersection(perpendicular_bisector(p, q, tol),
                                         perpendicular_bisector(q, r, tol), tol);
  S r2 = (dist2(center, p) + dist2(center, q) + dist2(center, r)) / S(3.0);
  return {center, r2};
}

template <class S>
S power_of_point(const Pt<S>& p, const Circ<S>& w) {
  return dist2(p, w.center) - w.r2;
}

// Circle through the first non-collinear triple of pts (combinations scanned in
// index order). Throws CollinearPoints when every triple is collinear.
template <class S>
Circ<S> fit_circle_first3(const std::vector<Pt<S>>& pts, const Tol<S>& tol) {
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (num::abs(cross(pts[j] - pts[i], pts[k] - pts[i])) > tol.area())
          return circle_through_3(pts[i], pts[j], pts[k], tol);
  fail(ErrorCode::CollinearPoints, "no non-collinear triple to fit a circle");
}

template <class S>
S concyclicity_residual(const std::vector<Pt<S>>& pts, const S& scale, const Tol<S>& tol) {
  if (pts.size() < 3) fail(ErrorCode::InvalidArgument, "need at least 3 points");
  Circ<S> fit = fit_circle_first3(pts, tol);
  S r = fit.radius();
  S worst(0.0);
  for (const Pt<S>& p : pts) {
    S dev = num::abs(dist(p, fit.center) - r);
    if (dev > worst) worst = dev;
  }
  return worst / scale;
}

// Algebraic least-squares circle (Kasa fit). Reporting only; the first-3 fit is
// what residuals are measured against.
template <class S>
Circ<S> fit_circle_lsq(const std::vector<Pt<S>>& pts, const Tol<S>& tol) {
  if (pts.size() < 3) fail(ErrorCode::InvalidArgument, "need at least 3 points");
  S sx(0.0), sy(0.0), sxx(0.0), syy(0.0), sxy(0.0), sz(0.0), sxz(0.0), syz(0.0);
  S n(0.0);
  for (const Pt<S>& p : pts) {
    S z = p.x * p.x + p.y * p.y;
    sx += p.x; sy += p.y;
    sxx += p.x * p.x; syy += p.y * p.y; sxy += p.x * p.y;
    sz += z; sxz += p.x * z; syz += p.y * z;
    n += S(1.0);
  }
  // Normal equations for x^2 + y^2 + Dx + Ey + F = 0.
  std::array<std::array<S, 4>, 3> m = {{{sxx, sxy, sx, S(-1.0) * sxz},
                                        {sxy, syy, sy, S(-1.0) * syz},
                                        {sx, sy, n, S(-1.0) * sz}}};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int row = col + 1; row < 3; ++row)
      if (num::abs(m[row][col]) > num::abs(m[piv][col])) piv = row;
    std::swap(m[piv], m[col]);
    if (num::abs(m[col][col]) <= tol.area() * tol.area())
      fail(ErrorCode::CollinearPoints, "degenerate least-squares circle system");
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      S f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  S d = m[0][3] / m[0][0];
  S e = m[1][3] / m[1][1];
  S f = m[2][3] / m[2][2];
  Pt<S> center{S(-0.5) * d, S(-0.5) * e};
  S r2 = (d * d + e * e) / S(4.0) - f;
  if (!(r2 > S(0.0))) fail(ErrorCode::CollinearPoints, "least-squares circle has no radius");
  return {center, r2};
}

// Real cross ratio (a,b;c,d) of four concyclic points under complex-pair
// arithmetic: Re ((a-c)(b-d)) / ((a-d)(b-c)). The imaginary part is checked
// against the tolerance; four concyclic points always give a real value.
template <class S>
S cross_ratio_on_circle(const Pt<S>& a, const Pt<S>& b, const Pt<S>& c, const Pt<S>& d,
                        const Tol<S>& tol) {
  const std::vector<Pt<S>> pts{a, b, c, d};
  S min_pair = dist2(a, b);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (dist2(pts[i], pts[j]) < min_pair) min_pair = dist2(pts[i], pts[j]);
  if (min_pair <= tol.length() * tol.length())
    fail(ErrorCode::CoincidentPoints, "cross ratio of coincident points");
  if (concyclicity_residual(pts, tol.length_scale, tol) > tol.eps_rel)
    fail(ErrorCode::NotConcyclic, "cross ratio requires concyclic points");

  auto cmul = [](const Pt<S>& u, const Pt<S>& v) -> Pt<S> {
    return {u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x};
  };
  Pt<S> numer = cmul(a - c, b - d);
  Pt<S> denom = cmul(a - d, b - c);
  S d2 = norm2(denom);
  if (!(d2 > S(0.0))) fail(ErrorCode::CoincidentPoints, "cross ratio denominator vanishes");
  Pt<S> q{(numer.x * denom.x + numer.y * denom.y) / d2,
          (numer.y * denom.x - numer.x * denom.y) / d2};
  if (num::abs(q.y) > tol.eps_rel * (S(1.0) + num::abs(q.x)))
    fail(ErrorCode::NotConcyclic, "cross ratio has a non-real component");
  return q.x;
}

// Circle through t and p tangent to w at t: its center is the intersection of
// line(center(w), t) with the perpendicular bisector of t and p.
template <class S>
Circ<S> tangent_circle_at_through(const Circ<S>& w, const Pt<S>& t, const Pt<S>& p,
                                  const Tol<S>& tol) {
  if (num::abs(power_of_point(t, w)) > tol.area())
    fail(ErrorCode::PointNotOnCircle, "tangency point is not on the circle");
  Ln<S> radius_line = line_through(w.center, t, tol);
  Ln<S> bisector = perpendicular_bisector(t, p, tol);
  Pt<S> center;
  try {
    center = line_line_intersection(radius_line, bisector, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParallelLines)
      fail(ErrorCode::DegenerateTangency, "point lies on the tangent line at t");
    throw;
  }
  return {center, dist2(center, t)};
}

// Intersection of the tangents to w at p and q; equidistant from p and q.
template <class S>
Pt<S> pole_of_chord(const Circ<S>& w, const Pt<S>& p, const Pt<S>& q, const Tol<S>& tol) {
  if (num::abs(power_of_point(p, w)) > tol.area() || num::abs(power_of_point(q, w)) > tol.area())
    fail(ErrorCode::PointNotOnCircle, "chord endpoint is not on the circle");
  if (dist2(p, q) <= tol.length() * tol.length())
    fail(ErrorCode::CoincidentPoints, "chord endpoints coincide");
  Pt<S> rp = p - w.center;
  Pt<S> rq = q - w.center;
  if (norm(rp + rq) <= tol.length())
    fail(ErrorCode::AntipodalChord, "tangents at antipodal points are parallel");
  Pt<S> np = unit(rp);
  Pt<S> nq = unit(rq);
  Ln<S> tp = detail::canonical_line(np, dot(np, p));
  Ln<S> tq = detail::canonical_line(nq, dot(nq, q));
  try {
    return line_line_intersection(tp, tq, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParallelLines)
      fail(ErrorCode::AntipodalChord, "tangent lines are parallel");
    throw;
  }
}

// Projection coefficient t with m ~ from + t*(to - from); no collinearity check.
template <class S>
S projection_ratio(const Pt<S>& base_from, const Pt<S>& base_to, const Pt<S>& m,
                   const Tol<S>& tol) {
  S len2 = dist2(base_from, base_to);
  if (len2 <= tol.length() * tol.length())
    fail(ErrorCode::DegenerateBase, "ratio along a degenerate base segment");
  return dot(m - base_from, base_to - base_from) / len2;
}

template <class S>
S directed_ratio_along(const Pt<S>& base_from, const Pt<S>& base_to, const Pt<S>& m,
                       const Tol<S>& tol) {
  S t = projection_ratio(base_from, base_to, m, tol);
  S perp = num::abs(cross(base_to - base_from, m - base_from)) / dist(base_from, base_to);
  if (perp > tol.length()) fail(ErrorCode::NotCollinear, "point is off the base line");
  return t;
}

}  // namespace lemoine

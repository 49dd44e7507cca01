#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lemoine/circles.hpp"
#include "lemoine/sampling.hpp"

using namespace lemoine;

namespace {

TriangleContext t0_ctx() { return TriangleContext::make(reference_triangle()); }

TriangleContext equilateral_ctx() {
  double s3 = std::sqrt(3.0) / 2.0;
  return TriangleContext::make(Triangle{{0.0, 1.0}, {-s3, -0.5}, {s3, -0.5}});
}

bool pt_near(const Point& p, double x, double y, double eps = 1e-12) {
  return std::fabs(p.x - x) <= eps && std::fabs(p.y - y) <= eps;
}

Point similarity(const Point& p, double theta, double scale, const Point& shift) {
  double c = std::cos(theta), s = std::sin(theta);
  return {scale * (c * p.x - s * p.y) + shift.x, scale * (s * p.x + c * p.y) + shift.y};
}

}  // namespace

TEST_CASE("first circle anchors") {
  TriangleContext ctx = t0_ctx();
  SixPointConfig cfg = first_lemoine(ctx, ctx.symmedian);
  CHECK(cfg.residual <= 1e-8);
  REQUIRE(cfg.ratio.has_value());
  CHECK(*cfg.ratio == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pt_near(cfg.fitted.center, 18.0 / 11.0, 23.0 / 22.0, 1e-12));

  TriangleContext eq = equilateral_ctx();
  SixPointConfig eq_cfg = first_lemoine(eq, eq.gcenter);
  CHECK(eq_cfg.residual <= 1e-8);
  CHECK(!eq_cfg.ratio.has_value());

  SixPointConfig off = first_lemoine(ctx, ctx.gcenter);
  CHECK(off.residual > 1e-4);
}

TEST_CASE("second circle anchors") {
  TriangleContext ctx = t0_ctx();
  SixPointConfig cfg = second_lemoine(ctx, ctx.symmedian);
  CHECK(cfg.residual <= 1e-8);
  CHECK(std::fabs(*cfg.ratio) <= 1e-12);
  CHECK(pt_near(cfg.fitted.center, 14.0 / 11.0, 12.0 / 11.0, 1e-12));
  // All six points equidistant from L.
  double r = cfg.fitted.radius();
  for (const Point& p : cfg.points)
    CHECK(dist(p, ctx.symmedian) == doctest::Approx(r).epsilon(1e-12));

  SixPointConfig off = second_lemoine(ctx, ctx.cd.o);
  CHECK(off.residual > 1e-4);
}

TEST_CASE("third circle anchors") {
  TriangleContext ctx = t0_ctx();
  SixPointConfig cfg = third_lemoine(ctx, ctx.symmedian);
  CHECK(cfg.residual <= 1e-8);
  CHECK(*cfg.ratio == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(pt_near(cfg.fitted.center, 10.0 / 11.0, 25.0 / 22.0, 1e-11));

  SixPointConfig off = third_lemoine(ctx, Point{1.9, 1.0});
  CHECK(off.residual > 1e-5);
}

TEST_CASE("bui circle anchors") {
  TriangleContext ctx = t0_ctx();
  SixPointConfig cfg = bui_circle(ctx, ctx.symmedian);
  CHECK(cfg.residual <= 1e-8);
  CHECK(*cfg.ratio == doctest::Approx(0.25).epsilon(1e-11));
  CHECK(pt_near(cfg.fitted.center, 16.0 / 11.0, 47.0 / 44.0, 1e-11));

  // The chord each tangent circle cuts from the vertex's two sides is parallel
  // to the opposite side.
  const Tri<double>& t = ctx.tri;
  CHECK(std::fabs(cross(unit(cfg.points[kAc] - cfg.points[kAb]), unit(t.c - t.b))) < 1e-12);
  CHECK(std::fabs(cross(unit(cfg.points[kBa] - cfg.points[kBc]), unit(t.a - t.c))) < 1e-12);
  CHECK(std::fabs(cross(unit(cfg.points[kCb] - cfg.points[kCa]), unit(t.b - t.a))) < 1e-12);

  TriangleContext eq = equilateral_ctx();
  CHECK(bui_circle(eq, eq.gcenter).residual <= 1e-8);
}

TEST_CASE("new circle anchors") {
  TriangleContext ctx = t0_ctx();
  SixPointConfig cfg = new_circle(ctx, ctx.symmedian);
  CHECK(cfg.residual <= 1e-8);
  CHECK(*cfg.ratio == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(pt_near(cfg.fitted.center, 20.0 / 11.0, 45.0 / 44.0, 1e-12));

  // Labels: the A-pair lies on line BC ordered along B -> C, and cyclically.
  const Tri<double>& t = ctx.tri;
  Line bc = line_through(t.b, t.c, ctx.tol);
  CHECK(std::fabs(bc.eval(cfg.points[kAb])) < 1e-12);
  CHECK(std::fabs(bc.eval(cfg.points[kAc])) < 1e-12);
  CHECK(dot(cfg.points[kAc] - cfg.points[kAb], t.c - t.b) > 0.0);
  Line ca = line_through(t.c, t.a, ctx.tol);
  CHECK(std::fabs(ca.eval(cfg.points[kBc])) < 1e-12);
  CHECK(std::fabs(ca.eval(cfg.points[kBa])) < 1e-12);
  CHECK(dot(cfg.points[kBa] - cfg.points[kBc], t.a - t.c) > 0.0);
  Line ab = line_through(t.a, t.b, ctx.tol);
  CHECK(std::fabs(ab.eval(cfg.points[kCa])) < 1e-12);
  CHECK(std::fabs(ab.eval(cfg.points[kCb])) < 1e-12);
  CHECK(dot(cfg.points[kCb] - cfg.points[kCa], t.b - t.a) > 0.0);

  TriangleContext eq = equilateral_ctx();
  SixPointConfig eq_cfg = new_circle(eq, eq.gcenter);
  CHECK(eq_cfg.residual <= 1e-8);
  CHECK(!eq_cfg.ratio.has_value());

  SixPointConfig off = new_circle(ctx, ctx.gcenter);
  CHECK(off.residual > 1e-5);
}

TEST_CASE("least-squares fit agrees with the three-point fit when concyclic") {
  TriangleContext ctx = t0_ctx();
  SixPointConfig cfg = new_circle(ctx, ctx.symmedian);
  Circle lsq = fit_circle_lsq(cfg.point_list(), ctx.tol);
  CHECK(dist(lsq.center, cfg.fitted.center) < 1e-9);
  CHECK(lsq.r2 == doctest::Approx(cfg.fitted.r2).epsilon(1e-9));
  CHECK(pt_near(lsq.center, 20.0 / 11.0, 45.0 / 44.0, 1e-9));
}

TEST_CASE("equilateral antiparallels coincide with parallels") {
  TriangleContext eq = equilateral_ctx();
  SixPointConfig par = first_lemoine(eq, eq.gcenter);
  SixPointConfig anti = second_lemoine(eq, eq.gcenter);
  for (size_t i = 0; i < 6; ++i) CHECK(dist(par.points[i], anti.points[i]) < 1e-12);
}

TEST_CASE("degenerate pivots are rejected") {
  TriangleContext ctx = t0_ctx();
  CHECK_THROWS_AS(first_lemoine(ctx, Point{2.0, 0.0}), Error);    // on side AB
  CHECK_THROWS_AS(new_circle(ctx, Point{5.0, 5.0}), Error);       // outside
  CHECK_THROWS_AS(third_lemoine(ctx, Point{0.0, 0.0}), Error);    // vertex
  try {
    new_circle(ctx, Point{5.0, 5.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePivot);
  }
}

TEST_CASE("new circle proof constructs") {
  TriangleContext ctx = t0_ctx();
  SixPointConfig cfg = new_circle(ctx, ctx.symmedian);
  const Tri<double>& t = ctx.tri;
  const Circle& w1 = cfg.trace.circles[0];
  const Circle& w2 = cfg.trace.circles[1];
  const Circle& w3 = cfg.trace.circles[2];
  double r2 = ctx.circumradius * ctx.circumradius;

  // Radical-axis membership of each vertex.
  CHECK(std::fabs(power_of_point(t.a, w2) - power_of_point(t.a, w3)) < 1e-9 * r2);
  CHECK(std::fabs(power_of_point(t.b, w3) - power_of_point(t.b, w1)) < 1e-9 * r2);
  CHECK(std::fabs(power_of_point(t.c, w1) - power_of_point(t.c, w2)) < 1e-9 * r2);

  // Pole of B'C' is collinear with A, L, A'.
  const CevianTriple<double>& cev = *cfg.trace.cevian;
  Point x = pole_of_chord(ctx.cd.omega, cev.b_p, cev.c_p, ctx.tol);
  Line al = line_through(t.a, ctx.symmedian, ctx.tol);
  CHECK(std::fabs(al.eval(x)) < 1e-10);
  CHECK(std::fabs(al.eval(cev.a_p)) < 1e-12);

  // L is the symmedian point of the cevian triangle.
  Point inner_l = symmedian_point(Triangle{cev.a_p, cev.b_p, cev.c_p}, ctx.tol);
  CHECK(dist(inner_l, ctx.symmedian) < 1e-12);

  // Parallelogram midpoint identity against the Bui A-circle.
  SixPointConfig bui = bui_circle(ctx, ctx.symmedian);
  Point m1 = midpoint(ctx.symmedian, ctx.cd.o);
  Point m2 = midpoint(w1.center, bui.trace.circles[0].center);
  CHECK(dist(m1, m2) < 1e-12);

  // Perpendicular bisectors of the three chords concur at the fitted center.
  Point m5{20.0 / 11.0, 45.0 / 44.0};
  for (auto [i, j] : {std::pair{kAb, kAc}, std::pair{kBc, kBa}, std::pair{kCa, kCb}}) {
    Line pb = perpendicular_bisector(cfg.points[i], cfg.points[j], ctx.tol);
    CHECK(std::fabs(pb.eval(m5)) < 1e-11);
  }
}

TEST_CASE("brocard spectrum anchors") {
  TriangleContext ctx = t0_ctx();
  Spectrum<double> sp = brocard_spectrum(ctx);
  const double expected[5] = {0.5, 0.0, -0.5, 0.25, 0.75};
  for (int i = 0; i < 5; ++i)
    CHECK(std::fabs(sp.entries[i].ratio - expected[i]) < 1e-9);
  CHECK(sp.open_slot == doctest::Approx(-0.25).epsilon(1e-9));

  TriangleContext eq = equilateral_ctx();
  CHECK_THROWS_AS(brocard_spectrum(eq), Error);
}

TEST_CASE("spectrum holds over random triangles") {
  Rng rng(21);
  RandomTriangleOptions opts;
  opts.min_ol_over_r = 0.01;
  for (int i = 0; i < 300; ++i) {
    TriangleContext ctx = TriangleContext::make(random_triangle(rng, opts));
    Spectrum<double> sp = brocard_spectrum(ctx);
    const double expected[5] = {0.5, 0.0, -0.5, 0.25, 0.75};
    for (int k = 0; k < 5; ++k)
      CHECK(std::fabs(sp.entries[k].ratio - expected[k]) < 1e-8);
  }
}

TEST_CASE("all five configurations are concyclic at L over random triangles") {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    TriangleContext ctx = TriangleContext::make(random_triangle(rng));
    for (CircleKind kind : {CircleKind::First, CircleKind::Second, CircleKind::Third,
                            CircleKind::Bui, CircleKind::New}) {
      SixPointConfig cfg = six_point_config(ctx, kind, ctx.symmedian);
      CHECK(cfg.residual <= 1e-8);
    }
  }
}

TEST_CASE("similarity covariance of the new configuration") {
  Rng rng(23);
  TriangleContext ctx = t0_ctx();
  SixPointConfig base = new_circle(ctx, ctx.symmedian);
  for (int trial = 0; trial < 50; ++trial) {
    double rot = rng.uniform(0, 6.28);
    double scale = rng.uniform(0.2, 5.0);
    Point shift{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    Triangle t2{similarity(ctx.tri.a, rot, scale, shift), similarity(ctx.tri.b, rot, scale, shift),
                similarity(ctx.tri.c, rot, scale, shift)};
    TriangleContext ctx2 = TriangleContext::make(t2);
    SixPointConfig cfg2 = new_circle(ctx2, similarity(ctx.symmedian, rot, scale, shift));
    for (size_t i = 0; i < 6; ++i) {
      Point expect = similarity(base.points[i], rot, scale, shift);
      CHECK(dist(cfg2.points[i], expect) < 1e-9 * scale);
    }
    REQUIRE(cfg2.ratio.has_value());
    CHECK(*cfg2.ratio == doctest::Approx(0.75).epsilon(1e-8));
  }
}

TEST_CASE("construction failure away from L is NoRealIntersection") {
  // Hunt for a pivot whose tangent circle misses its side line; such pivots
  // exist near the circumcircle boundary inside thin triangles.
  TriangleContext ctx = TriangleContext::make(Triangle{{0, 0}, {10, 0}, {5, 1.2}});
  int failures = 0;
  Rng rng(24);
  for (int i = 0; i < 2000; ++i) {
    double u = rng.uniform(0.02, 0.98);
    double v = rng.uniform(0.02, 0.98 - u);
    Point p{u * ctx.tri.a.x + v * ctx.tri.b.x + (1 - u - v) * ctx.tri.c.x,
            u * ctx.tri.a.y + v * ctx.tri.b.y + (1 - u - v) * ctx.tri.c.y};
    try {
      new_circle(ctx, p);
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::NoRealIntersection ||
             e.code() == ErrorCode::DegeneratePivot));
      ++failures;
    }
  }
  MESSAGE("construction failures observed: ", failures);
}

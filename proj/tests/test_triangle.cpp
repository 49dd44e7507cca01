#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lemoine/sampling.hpp"
#include "lemoine/triangle.hpp"

using namespace lemoine;

namespace {

const Tolerance kTol{1e-9, std::sqrt(5.0)};

Triangle equilateral_unit() {
  double s3 = std::sqrt(3.0) / 2.0;
  return {{0.0, 1.0}, {-s3, -0.5}, {s3, -0.5}};
}

bool pt_near(const Point& p, double x, double y, double eps = 1e-12) {
  return std::fabs(p.x - x) <= eps && std::fabs(p.y - y) <= eps;
}

}  // namespace

TEST_CASE("circumcircle anchors") {
  CircumData<double> cd = circumcircle(reference_triangle(), kTol);
  CHECK(pt_near(cd.o, 2.0, 1.0, 1e-13));
  CHECK(cd.r2 == doctest::Approx(5.0).epsilon(1e-14));

  Tolerance unit_tol{1e-9, 1.0};
  CircumData<double> eq = circumcircle(equilateral_unit(), unit_tol);
  CHECK(pt_near(eq.o, 0.0, 0.0, 1e-14));
  CHECK(eq.r2 == doctest::Approx(1.0));

  CHECK_THROWS_AS(circumcircle(Triangle{{0, 0}, {1, 1}, {2, 2}}, unit_tol), Error);
}

TEST_CASE("centroid anchors") {
  Point g = centroid(reference_triangle());
  CHECK(pt_near(g, 5.0 / 3.0, 1.0, 1e-14));
  CHECK(pt_near(centroid(equilateral_unit()), 0.0, 0.0, 1e-14));
}

TEST_CASE("symmedian point anchors") {
  Point l = symmedian_point(reference_triangle(), kTol);
  CHECK(pt_near(l, 14.0 / 11.0, 12.0 / 11.0, 1e-13));

  Tolerance unit_tol{1e-9, 1.0};
  CHECK(pt_near(symmedian_point(equilateral_unit(), unit_tol), 0.0, 0.0, 1e-14));

  Triangle isosceles{{0, 0}, {2, 0}, {1, 2}};
  CHECK(symmedian_point(isosceles, unit_tol).x == doctest::Approx(1.0));

  CHECK_THROWS_AS(symmedian_point(Triangle{{0, 0}, {1, 1}, {2, 2}}, unit_tol), Error);
}

TEST_CASE("synthetic symmedian agrees with the weighted formula") {
  SyntheticSymmedian<double> syn = symmedian_point_synthetic(reference_triangle(), kTol);
  CHECK(!syn.formula_fallback);
  CHECK(pt_near(syn.point, 14.0 / 11.0, 12.0 / 11.0, 1e-12));

  // Right angle at A: chord BC is a diameter, its pole is at infinity; the
  // other two chords still give two usable symmedian lines.
  Triangle right{{0, 0}, {1, 0}, {0, 1}};
  Tolerance tol{1e-9, std::sqrt(0.5)};
  SyntheticSymmedian<double> syn_r = symmedian_point_synthetic(right, tol);
  Point formula = symmedian_point(right, tol);
  CHECK(dist(syn_r.point, formula) < 1e-12);
}

TEST_CASE("synthetic symmedian property over random triangles") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    Triangle t = random_triangle(rng);
    Tolerance tol{1e-9, 1.0};
    Point formula = symmedian_point(t, tol);
    SyntheticSymmedian<double> syn = symmedian_point_synthetic(t, tol);
    CHECK(dist(formula, syn.point) <= 1e-8);  // R = 1
  }
}

TEST_CASE("symmedian point is strictly interior") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    Triangle t = random_triangle(rng);
    Tolerance tol{1e-9, 1.0};
    Point l = symmedian_point(t, tol);
    double s1 = cross(t.b - t.a, l - t.a);
    double s2 = cross(t.c - t.b, l - t.b);
    double s3 = cross(t.a - t.c, l - t.c);
    bool inside = (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
    CHECK(inside);
  }
}

TEST_CASE("brocard axis anchors") {
  Line axis = brocard_axis(reference_triangle(), kTol);
  CHECK(std::fabs(axis.eval({2.0, 1.0})) < 1e-13);
  CHECK(std::fabs(axis.eval({14.0 / 11.0, 12.0 / 11.0})) < 1e-13);

  Tolerance unit_tol{1e-9, 1.0};
  CHECK_THROWS_AS(brocard_axis(equilateral_unit(), unit_tol), Error);

  Triangle isosceles{{0, 0}, {2, 0}, {1, 2}};
  Line iso_axis = brocard_axis(isosceles, unit_tol);
  CHECK(std::fabs(iso_axis.eval({1.0, 0.3})) < 1e-13);
  CHECK(std::fabs(iso_axis.eval({1.0, 1.7})) < 1e-13);
}

TEST_CASE("circumcevian triangle anchors") {
  Triangle t0 = reference_triangle();
  Point l{14.0 / 11.0, 12.0 / 11.0};
  CevianTriple<double> cev = circumcevian_triangle(t0, l, kTol);
  CHECK(pt_near(cev.a_p, 56.0 / 17.0, 48.0 / 17.0, 1e-12));

  Circle omega{{2, 1}, 5.0};
  for (const Point& p : {cev.a_p, cev.b_p, cev.c_p})
    CHECK(std::fabs(power_of_point(p, omega)) < 1e-12);

  CHECK_THROWS_AS(circumcevian_triangle(t0, Point{100, 100}, kTol), Error);
  CHECK_THROWS_AS(circumcevian_triangle(t0, Point{0, 0}, kTol), Error);
}

TEST_CASE("circumcevian from the incenter bisects the far arc") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Triangle t = random_triangle(rng);
    double a = dist(t.b, t.c), b = dist(t.c, t.a), c = dist(t.a, t.b);
    Point incenter = (1.0 / (a + b + c)) * Point{a * t.a.x + b * t.b.x + c * t.c.x,
                                                 a * t.a.y + b * t.b.y + c * t.c.y};
    Tolerance tol{1e-9, 1.0};
    CevianTriple<double> cev = circumcevian_triangle(t, incenter, tol);
    CHECK(std::fabs(dist(cev.a_p, t.b) - dist(cev.a_p, t.c)) < 1e-9);
  }
}

TEST_CASE("harmonic quadrilateral at the symmedian cevian") {
  Triangle t0 = reference_triangle();
  Point l{14.0 / 11.0, 12.0 / 11.0};
  CevianTriple<double> cev = circumcevian_triangle(t0, l, kTol);
  double cr = cross_ratio_on_circle(t0.a, cev.a_p, t0.c, t0.b, kTol);
  CHECK(cr == doctest::Approx(-1.0).epsilon(1e-12));

  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    Triangle t = random_triangle(rng);
    Tolerance tol{1e-9, 1.0};
    Point sym = symmedian_point(t, tol);
    CevianTriple<double> c = circumcevian_triangle(t, sym, tol);
    CHECK(std::fabs(cross_ratio_on_circle(t.a, c.a_p, t.c, t.b, tol) + 1.0) < 1e-9);
  }
}

TEST_CASE("antiparallel direction") {
  Tolerance unit_tol{1e-9, 1.0};
  // Isosceles about x = 1: the antiparallel of BC at the apex is parallel to BC.
  Triangle iso{{1, 2}, {0, 0}, {2, 0}};
  Point d = antiparallel_direction(iso, SideId::BC, VertexId::A, unit_tol);
  CHECK(std::fabs(cross(d, iso.c - iso.b)) < 1e-12);

  // A line along the antiparallel direction cuts AB and AC in points concyclic
  // with B and C.
  Triangle t0 = reference_triangle();
  Point dir = antiparallel_direction(t0, SideId::BC, VertexId::A, kTol);
  Ln<double> cut = line_from_point_dir(Point{0.5, 0.75}, dir);
  Point p = line_line_intersection(cut, line_through(t0.a, t0.b, kTol), kTol);
  Point q = line_line_intersection(cut, line_through(t0.a, t0.c, kTol), kTol);
  double res =
      concyclicity_residual(std::vector<Point>{t0.b, t0.c, q, p}, std::sqrt(5.0), kTol);
  CHECK(res < 1e-12);

  CHECK_THROWS_AS(antiparallel_direction(t0, SideId::BC, VertexId::B, kTol), Error);
}

TEST_CASE("triangle context caches consistent data") {
  TriangleContext ctx = TriangleContext::make(reference_triangle());
  CHECK(pt_near(ctx.cd.o, 2.0, 1.0, 1e-13));
  CHECK(pt_near(ctx.symmedian, 14.0 / 11.0, 12.0 / 11.0, 1e-13));
  CHECK(ctx.circumradius == doctest::Approx(std::sqrt(5.0)));
  CHECK(ctx.tol.length_scale == doctest::Approx(ctx.circumradius));
  CHECK(!ctx.equilateral_like());

  TriangleContext eq = TriangleContext::make(equilateral_unit());
  CHECK(eq.equilateral_like());

  CHECK_THROWS_AS(TriangleContext::make(Triangle{{0, 0}, {1, 1}, {2, 2}}), Error);
  CHECK_THROWS_AS(TriangleContext::make(reference_triangle(), -1.0), Error);
}

TEST_CASE("random triangles are well conditioned") {
  Rng rng(15);
  RandomTriangleOptions opts;
  opts.min_ol_over_r = 0.05;
  for (int i = 0; i < 500; ++i) {
    Triangle t = random_triangle(rng, opts);
    Tolerance tol{1e-9, 1.0};
    CircumData<double> cd = circumcircle(t, tol);
    CHECK(norm(cd.o) < 1e-12);  // inscribed in the unit circle at the origin
    CHECK(cd.r2 == doctest::Approx(1.0));
    double a = dist(t.b, t.c), b = dist(t.c, t.a), c = dist(t.a, t.b);
    double min_angle = std::min({std::asin(std::min(1.0, a / 2.0)),
                                 std::asin(std::min(1.0, b / 2.0)),
                                 std::asin(std::min(1.0, c / 2.0))});
    CHECK(min_angle >= 10.0 * 3.14159265358979 / 180.0 - 1e-9);
    CHECK(norm(symmedian_point(t, tol)) >= 0.05 - 1e-12);
  }
}

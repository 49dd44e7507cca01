#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "lemoine/figures.hpp"
#include "lemoine/report.hpp"

using namespace lemoine;

namespace {

TriangleContext t0_ctx() { return TriangleContext::make(reference_triangle()); }

size_t count_of(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("json writer basics") {
  Json j = Json::object();
  j.set("zeta", Json::num(0.75));
  j.set("alpha", Json::str("a\"b\\c"));
  j.set("list", Json::array().push(Json::num(1)).push(Json::boolean(false)).push(Json::null()));
  std::string s = j.dump();
  CHECK(s == "{\"alpha\":\"a\\\"b\\\\c\",\"list\":[1,false,null],\"zeta\":0.75}");
  CHECK(j.dump() == j.dump());

  CHECK_THROWS_AS(Json::num(std::numeric_limits<double>::quiet_NaN()), Error);
  CHECK_THROWS_AS(Json::array().set("k", Json::null()), Error);
  CHECK_THROWS_AS(Json::object().push(Json::null()), Error);
}

TEST_CASE("json numbers keep 17 significant digits") {
  Json j = Json::object();
  j.set("x", Json::num(14.0 / 11.0));
  CHECK(j.dump() == "{\"x\":1.2727272727272727}");
}

TEST_CASE("centers report schema and key order") {
  Json rep = centers_report(reference_triangle(), 1e-9);
  std::string s = rep.dump();
  size_t p_inputs = s.find("\"inputs\"");
  size_t p_kind = s.find("\"kind\"");
  size_t p_outputs = s.find("\"outputs\"");
  size_t p_pass = s.find("\"pass\"");
  size_t p_res = s.find("\"residuals\"");
  REQUIRE(p_inputs != std::string::npos);
  CHECK(p_inputs < p_kind);
  CHECK(p_kind < p_outputs);
  CHECK(p_outputs < p_pass);
  CHECK(p_pass < p_res);
  CHECK(s.find("\"O\":[2,1.0000000000000002]") != std::string::npos);
  CHECK(s.find("\"L\":[1.2727272727272727,1.0909090909090908]") != std::string::npos);
}

TEST_CASE("centers text mentions undefined ratios only for equilateral input") {
  CentersView t0 = centers_view(reference_triangle(), 1e-9);
  std::string text = centers_text(t0);
  CHECK(text.find("M1 (first)") != std::string::npos);
  CHECK(text.find("ratio: ") != std::string::npos);
  CHECK(text.find("undefined") == std::string::npos);

  double s3 = std::sqrt(3.0) / 2.0;
  CentersView eq = centers_view(Triangle{{0.0, 1.0}, {-s3, -0.5}, {s3, -0.5}}, 1e-9);
  std::string eq_text = centers_text(eq);
  CHECK(eq_text.find("ratio: undefined (O = L)") != std::string::npos);
}

TEST_CASE("circle report content") {
  Json rep = circle_report(reference_triangle(), 1e-9, CircleKind::New, std::nullopt);
  std::string s = rep.dump();
  CHECK(s.find("\"kind\":\"circle.new\"") != std::string::npos);
  CHECK(s.find("\"concyclic\":true") != std::string::npos);
  CHECK(s.find("\"A_b\":") != std::string::npos);
  CHECK(s.find("\"cevian\":{") != std::string::npos);

  Json off = circle_report(reference_triangle(), 1e-9, CircleKind::New, Point{5.0 / 3.0, 1.0});
  std::string so = off.dump();
  CHECK(so.find("\"concyclic\":false") != std::string::npos);
  CHECK(so.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("bigfloat backend reports a far smaller residual") {
  SixPointConfig d = circle_config_computed(reference_triangle(), 1e-9, CircleKind::New,
                                            std::nullopt, 0);
  SixPointConfig b = circle_config_computed(reference_triangle(), 1e-9, CircleKind::New,
                                            std::nullopt, 128);
  CHECK(d.residual > 0.0);
  CHECK(b.residual < d.residual * 1e-6);
  CHECK(dist(d.fitted.center, b.fitted.center) < 1e-12);
}

TEST_CASE("tucker and hunt reports") {
  TriangleContext ctx = t0_ctx();
  std::string s = tucker_report(ctx, 0.3).dump();
  CHECK(s.find("\"kind\":\"circle.tucker\"") != std::string::npos);
  CHECK(s.find("\"closure_residual\":") != std::string::npos);
  CHECK(s.find("\"pass\":true") != std::string::npos);

  std::string h = hunt_report(ctx).dump();
  CHECK(h.find("\"open_problem\":true") != std::string::npos);
  CHECK(h.find("\"t_target\":-0.25") != std::string::npos);
  CHECK(h.find("\"found\":1") != std::string::npos);
}

TEST_CASE("verify dispatcher") {
  TriangleContext ctx = t0_ctx();
  VerifyOutcome spectrum = run_verify(ctx, "spectrum", 0, 0, 7, 0);
  CHECK(spectrum.all_pass);
  CHECK(spectrum.json.dump().find("\"claim_id\":\"spectrum\"") != std::string::npos);

  VerifyOutcome uniq = run_verify(ctx, "uniqueness", 0, 17, 7, 0);
  CHECK(uniq.json.dump().find("uniqueness.first") != std::string::npos);

  CHECK_THROWS_AS(run_verify(ctx, "bogus", 0, 0, 7, 0), Error);
}

TEST_CASE("verify all output is byte-deterministic") {
  TriangleContext ctx = t0_ctx();
  std::string a = run_verify(ctx, "all", 10, 17, 7, 0).json.dump();
  std::string b = run_verify(ctx, "all", 10, 17, 7, 0).json.dump();
  CHECK(a == b);
  std::string c = run_verify(ctx, "all", 10, 17, 8, 0).json.dump();
  CHECK(a != c);  // different seed, different samples
}

TEST_CASE("figure 5 element census") {
  std::string svg = svg_figure(t0_ctx(), 5);
  CHECK(count_of(svg, "class=\"triangle-side\"") == 3);
  CHECK(count_of(svg, "class=\"circumcircle\"") == 1);
  CHECK(count_of(svg, "class=\"aux-circle\"") == 3);
  CHECK(count_of(svg, "class=\"sixpoint-circle\"") == 1);
  CHECK(count_of(svg, "class=\"six-point\"") == 6);
  CHECK(count_of(svg, "class=\"cevian-point\"") == 3);
  CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);  // no external references
}

TEST_CASE("figure catalogue") {
  TriangleContext ctx = t0_ctx();
  for (int id = 1; id <= 8; ++id) {
    std::string svg = svg_figure(ctx, id);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.rfind("</svg>") == svg.size() - 6);
    CHECK(svg_figure(ctx, id) == svg);  // deterministic bytes
  }
  CHECK(count_of(svg_figure(ctx, 6), "class=\"aux-circle\"") == 0);
  CHECK(count_of(svg_figure(ctx, 6), "class=\"circumcircle\"") == 0);
  CHECK(count_of(svg_figure(ctx, 8), "class=\"center-mark\"") == 7);  // O, M1..M5, open slot

  CHECK_THROWS_AS(svg_figure(ctx, 0), Error);
  CHECK_THROWS_AS(svg_figure(ctx, 9), Error);
}

TEST_CASE("pretty dump renders nested structure") {
  Json j = Json::object();
  j.set("b", Json::num(2));
  j.set("a", Json::array().push(Json::num(1)));
  std::string pretty = j.dump_pretty();
  CHECK(pretty == "{\n  \"a\": [\n    1\n  ],\n  \"b\": 2\n}\n");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lemoine/report.hpp"
#include "lemoine/verify.hpp"

using namespace lemoine;

namespace {

TriangleContext t0_ctx() { return TriangleContext::make(reference_triangle()); }

double residual_named(const VerificationReport& rep, const std::string& name) {
  for (const NamedResidual& r : rep.residuals)
    if (r.name == name) return r.value;
  FAIL("missing residual ", name);
  return 0.0;
}

}  // namespace

TEST_CASE("theorem verifier passes on the reference triangle") {
  VerificationReport rep = verify_theorem_new(t0_ctx());
  CHECK(rep.pass);
  CHECK(rep.claim_id == "new-circle");
  CHECK(residual_named(rep, "concyclicity") <= 1e-8);
  CHECK(residual_named(rep, "center_ratio") <= 1e-9);
  CHECK(rep.outputs.at("center_ratio") == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(rep.outputs.at("nontucker_margin") > 1e-3);
}

TEST_CASE("theorem verifier passes on random triangles") {
  Rng rng(41);
  RandomTriangleOptions opts;
  opts.min_ol_over_r = 0.01;
  for (int i = 0; i < 100; ++i) {
    TriangleContext ctx = TriangleContext::make(random_triangle(rng, opts));
    VerificationReport rep = verify_theorem_new(ctx);
    CHECK(rep.pass);
  }
}

TEST_CASE("near-equilateral triangles are rejected") {
  double s3 = std::sqrt(3.0) / 2.0;
  TriangleContext eq = TriangleContext::make(Triangle{{0.0, 1.0}, {-s3, -0.5}, {s3, -0.5}});
  CHECK_THROWS_AS(verify_theorem_new(eq), Error);
  try {
    verify_theorem_new(eq);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EquilateralDegenerate);
  }
}

TEST_CASE("lemma verifier") {
  VerificationReport rep = verify_lemma_circumcevian(t0_ctx());
  CHECK(rep.pass);
  CHECK(residual_named(rep, "lemoine_of_cevian") <= 1e-8);
  CHECK(residual_named(rep, "harmonic_cevian_quad") <= 1e-8);
  CHECK(residual_named(rep, "harmonic_vertex_quad") <= 1e-8);

  // Isosceles: everything stays on the symmetry axis.
  TriangleContext iso = TriangleContext::make(Triangle{{0, 0}, {2, 0}, {1, 2}});
  VerificationReport iso_rep = verify_lemma_circumcevian(iso);
  CHECK(iso_rep.pass);
  CHECK(iso_rep.outputs.at("cevian_lemoine_x") == doctest::Approx(1.0).epsilon(1e-12));

  // Equilateral: the cevian triangle is the antipodal copy, L stays the center.
  double s3 = std::sqrt(3.0) / 2.0;
  TriangleContext eq = TriangleContext::make(Triangle{{0.0, 1.0}, {-s3, -0.5}, {s3, -0.5}});
  VerificationReport eq_rep = verify_lemma_circumcevian(eq);
  CHECK(eq_rep.pass);
  CHECK(std::fabs(eq_rep.outputs.at("cevian_lemoine_x")) < 1e-12);
  CHECK(std::fabs(eq_rep.outputs.at("cevian_lemoine_y")) < 1e-12);
}

TEST_CASE("proof scaffold at L and at the centroid") {
  TriangleContext ctx = t0_ctx();
  VerificationReport at_l = verify_proof_scaffold(ctx);
  CHECK(at_l.pass);
  for (const NamedResidual& r : at_l.residuals) CHECK(r.value <= 1e-8);

  VerificationReport at_g = verify_proof_scaffold(ctx, ctx.gcenter);
  CHECK(!at_g.pass);
  CHECK(residual_named(at_g, "pole_collinear") > 1e-4);
}

TEST_CASE("spectrum verifier") {
  VerificationReport rep = verify_spectrum(t0_ctx());
  CHECK(rep.pass);
  CHECK(rep.outputs.at("open_slot") == doctest::Approx(-0.25).epsilon(1e-9));
}

TEST_CASE("tucker suite verifier") {
  VerificationReport rep = verify_tucker_suite(t0_ctx(), 100, 7);
  CHECK(rep.pass);
  CHECK(residual_named(rep, "chain_closure") <= 1e-9);
  CHECK(residual_named(rep, "radius_match_first") <= 1e-8);
  CHECK(residual_named(rep, "radius_match_second") <= 1e-8);
  CHECK(residual_named(rep, "radius_match_bui") <= 1e-8);
}

TEST_CASE("converse sweep meets its thresholds") {
  TriangleContext ctx = t0_ctx();
  SweepResult sweep = converse_sweep(ctx, 33);
  CHECK(sweep.residual_at_l <= 1e-8);
  CHECK(sweep.far_floor_violations == 0);
  CHECK(sweep.far_min_residual > 1e-4);
  CHECK(sweep.refined_dist_to_l <= 1e-6);
  CHECK(sweep.failure_count == 0);
  CHECK(dist(sweep.argmin, ctx.symmedian) < 0.1 * ctx.circumradius);

  VerificationReport rep = sweep_to_report(sweep, ctx);
  CHECK(rep.pass);
  CHECK(rep.claim_id == "converse");
}

TEST_CASE("converse argmin moves toward L under grid refinement") {
  TriangleContext ctx = t0_ctx();
  double d17 = dist(converse_sweep(ctx, 17).argmin, ctx.symmedian);
  double d33 = dist(converse_sweep(ctx, 33).argmin, ctx.symmedian);
  double d65 = dist(converse_sweep(ctx, 65).argmin, ctx.symmedian);
  CHECK(d33 <= d17 + 1e-12);
  CHECK(d65 <= d33 + 1e-12);
}

TEST_CASE("converse sweep on the equilateral triangle finds the center") {
  double s3 = std::sqrt(3.0) / 2.0;
  TriangleContext eq = TriangleContext::make(Triangle{{0.0, 1.0}, {-s3, -0.5}, {s3, -0.5}});
  SweepResult sweep = converse_sweep(eq, 33);
  CHECK(sweep.residual_at_l <= 1e-8);
  CHECK(dist(sweep.argmin, eq.symmedian) < 0.1);
  CHECK(dist(sweep.refined, eq.symmedian) <= 1e-5);
}

TEST_CASE("uniqueness sweeps for the known circles") {
  TriangleContext ctx = t0_ctx();
  for (CircleKind kind :
       {CircleKind::First, CircleKind::Second, CircleKind::Third, CircleKind::Bui}) {
    SweepResult sweep = uniqueness_sweep(ctx, kind, 33);
    CHECK(sweep.residual_at_l <= 1e-8);
    CHECK(sweep.refined_dist_to_l <= 1e-4);
    VerificationReport rep = sweep_to_report(sweep, ctx);
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(uniqueness_sweep(ctx, CircleKind::New, 17), Error);

  double s3 = std::sqrt(3.0) / 2.0;
  TriangleContext eq = TriangleContext::make(Triangle{{0.0, 1.0}, {-s3, -0.5}, {s3, -0.5}});
  SweepResult eq_sweep = uniqueness_sweep(eq, CircleKind::Bui, 33);
  CHECK(eq_sweep.residual_at_l <= 1e-8);
  CHECK(dist(eq_sweep.argmin, eq.symmedian) < 0.1);
}

TEST_CASE("precision verifier sees at least a million-fold shrink") {
  VerificationReport rep = verify_precision(t0_ctx(), 128);
  CHECK(rep.pass);
  for (const NamedResidual& r : rep.residuals) CHECK(r.value <= 1e-6);
  // Anchor errors at 128 bits drop far below the binary64 ones.
  CHECK(rep.outputs.at("bigfloat_symmedian") < 1e-30);
  CHECK(rep.outputs.at("binary64_symmedian") > 0.0);
}

TEST_CASE("run_all aggregates and is deterministic") {
  TriangleContext ctx = t0_ctx();
  RunAllOptions opts;
  opts.trials = 5;
  opts.grid_n = 33;
  opts.seed = 7;
  RunAllResult first = run_all(ctx, opts);
  CHECK(first.pass);
  CHECK(first.reports.size() >= 12);

  RunAllResult second = run_all(ctx, opts);
  REQUIRE(first.reports.size() == second.reports.size());
  for (size_t i = 0; i < first.reports.size(); ++i) {
    CHECK(report_to_json(first.reports[i]).dump() == report_to_json(second.reports[i]).dump());
  }

  RunAllOptions other = opts;
  other.seed = 8;
  RunAllResult third = run_all(ctx, other);
  CHECK(third.pass);  // verdicts agree across seeds even though samples differ

  RunAllOptions bad = opts;
  bad.trials = 0;
  CHECK_THROWS_AS(run_all(ctx, bad), Error);
}

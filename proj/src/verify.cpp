#include "lemoine/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace lemoine {

void VerificationReport::add(const std::string& name, double value, double threshold) {
  residuals.push_back({name, value, threshold});
}

void VerificationReport::finalize() {
  std::sort(residuals.begin(), residuals.end(),
            [](const NamedResidual& a, const NamedResidual& b) { return a.name < b.name; });
  pass = true;
  for (const NamedResidual& r : residuals) pass = pass && r.ok();
}

std::string triangle_digest(const Triangle& t) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "A=(%.17g,%.17g);B=(%.17g,%.17g);C=(%.17g,%.17g)", t.a.x, t.a.y,
                t.b.x, t.b.y, t.c.x, t.c.y);
  return buf;
}

namespace {

constexpr double kEquilateralGuard = 1e-6;  // * R, below this the center ratio is ill-posed

void require_ratio_defined(const TriangleContext& ctx) {
  if (dist(ctx.cd.o, ctx.symmedian) < kEquilateralGuard * ctx.circumradius)
    fail(ErrorCode::EquilateralDegenerate, "triangle too close to equilateral for center ratios");
}

double off_axis(const TriangleContext& ctx, const Point& p) {
  Line axis = brocard_axis_line(ctx.cd.o, ctx.symmedian, ctx.tol);
  return std::fabs(axis.eval(p)) / ctx.circumradius;
}

double quad_residual(const TriangleContext& ctx, const std::array<Point, 6>& pts, int i, int j,
                     int k, int l) {
  return concyclicity_residual(std::vector<Point>{pts[i], pts[j], pts[k], pts[l]},
                               ctx.circumradius, ctx.tol);
}

double parallel_residual(const Point& u, const Point& v) {
  return std::fabs(cross(unit(u), unit(v)));
}

}  // namespace

VerificationReport verify_theorem_new(const TriangleContext& ctx) {
  require_ratio_defined(ctx);
  VerificationReport rep;
  rep.claim_id = "new-circle";
  rep.inputs_digest = triangle_digest(ctx.tri);

  SixPointConfig cfg = new_circle(ctx, ctx.symmedian);
  rep.add("concyclicity", cfg.residual, thresholds::kConcyclicity);
  rep.add("center_on_axis", off_axis(ctx, cfg.fitted.center), thresholds::kConcyclicity);
  double t = projection_ratio(ctx.symmedian, ctx.cd.o, cfg.fitted.center, ctx.tol);
  rep.add("center_ratio", std::fabs(t - 0.75), thresholds::kRatio);

  // The three cyclic quadrilaterals the proof derives from the radical axes.
  rep.add("quad_on_b_c_sides", quad_residual(ctx, cfg.points, kBa, kBc, kCb, kCa),
          thresholds::kConcyclicity);
  rep.add("quad_on_a_b_sides", quad_residual(ctx, cfg.points, kBa, kBc, kAc, kAb),
          thresholds::kConcyclicity);
  rep.add("quad_on_a_c_sides", quad_residual(ctx, cfg.points, kAc, kAb, kCb, kCa),
          thresholds::kConcyclicity);

  TuckerVerdict verdict = is_tucker(ctx, cfg.fitted);
  double shortfall =
      verdict.is_tucker ? thresholds::kNonTuckerMarginFloor - verdict.margin
                        : std::max(0.0, thresholds::kNonTuckerMarginFloor - verdict.margin);
  rep.add("nontucker_margin_shortfall", shortfall, 0.0);

  rep.outputs["center_x"] = cfg.fitted.center.x;
  rep.outputs["center_y"] = cfg.fitted.center.y;
  rep.outputs["r2"] = cfg.fitted.r2;
  rep.outputs["center_ratio"] = t;
  rep.outputs["nontucker_margin"] = verdict.margin;
  rep.outputs["tucker_matches"] = static_cast<double>(verdict.matches.size());
  rep.finalize();
  return rep;
}

VerificationReport verify_lemma_circumcevian(const TriangleContext& ctx) {
  VerificationReport rep;
  rep.claim_id = "cevian-lemoine";
  rep.inputs_digest = triangle_digest(ctx.tri);

  const Point l = ctx.symmedian;
  CevianTriple<double> cev = circumcevian_triangle(ctx.tri, l, ctx.cd, ctx.tol);
  Triangle inner{cev.a_p, cev.b_p, cev.c_p};
  Point inner_l = symmedian_point(inner, ctx.tol);
  rep.add("lemoine_of_cevian", dist(inner_l, l) / ctx.circumradius, thresholds::kLemma);

  double cr_cevian = cross_ratio_on_circle(ctx.tri.a, cev.a_p, cev.b_p, cev.c_p, ctx.tol);
  rep.add("harmonic_cevian_quad", std::fabs(cr_cevian + 1.0), thresholds::kLemma);
  double cr_vertex = cross_ratio_on_circle(ctx.tri.a, cev.a_p, ctx.tri.c, ctx.tri.b, ctx.tol);
  rep.add("harmonic_vertex_quad", std::fabs(cr_vertex + 1.0), thresholds::kLemma);

  rep.outputs["cevian_lemoine_x"] = inner_l.x;
  rep.outputs["cevian_lemoine_y"] = inner_l.y;
  rep.outputs["cross_ratio_cevian"] = cr_cevian;
  rep.outputs["cross_ratio_vertex"] = cr_vertex;
  rep.finalize();
  return rep;
}

VerificationReport verify_proof_scaffold(const TriangleContext& ctx, std::optional<Point> pivot) {
  VerificationReport rep;
  rep.claim_id = "proof-scaffold";
  rep.inputs_digest = triangle_digest(ctx.tri);
  const Point p = pivot.value_or(ctx.symmedian);
  const Tri<double>& t = ctx.tri;

  SixPointConfig cfg_new = new_circle(ctx, p);
  SixPointConfig cfg_bui = bui_circle(ctx, p);
  const CevianTriple<double>& cev = *cfg_new.trace.cevian;
  const Circle& w1 = cfg_new.trace.circles[0];
  const Circle& w2 = cfg_new.trace.circles[1];
  const Circle& w3 = cfg_new.trace.circles[2];

  // (i) Each vertex has equal power with respect to the two far circles, so it
  // lies on their radical axis.
  double r2n = ctx.circumradius * ctx.circumradius;
  double radical = std::fabs(power_of_point(t.a, w2) - power_of_point(t.a, w3)) / r2n;
  radical = std::max(radical, std::fabs(power_of_point(t.b, w3) - power_of_point(t.b, w1)) / r2n);
  radical = std::max(radical, std::fabs(power_of_point(t.c, w1) - power_of_point(t.c, w2)) / r2n);
  rep.add("radical_axis_powers", radical, thresholds::kScaffold);

  // (ii) The pole of chord B'C' is collinear with A, the pivot, and A'.
  Point x = pole_of_chord(ctx.cd.omega, cev.b_p, cev.c_p, ctx.tol);
  Line ap = line_through(t.a, p, ctx.tol);
  double collin = std::max(std::fabs(ap.eval(x)), std::fabs(ap.eval(cev.a_p))) / ctx.circumradius;
  rep.add("pole_collinear", collin, thresholds::kScaffold);

  // (iii) Midpoint identity of the parallelogram spanned by the pivot, O and
  // the two tangent-circle centers at A' and A.
  Point m1 = midpoint(p, ctx.cd.o);
  Point m2 = midpoint(w1.center, cfg_bui.trace.circles[0].center);
  rep.add("parallelogram_midpoint", dist(m1, m2) / ctx.circumradius, thresholds::kScaffold);

  // (iv) Perpendicular bisectors of the three chords concur at the point at
  // 3/4 of the way from the pivot to O.
  Point m_target = p + 0.75 * (ctx.cd.o - p);
  double conc = 0.0;
  conc = std::max(conc, std::fabs(perpendicular_bisector(cfg_new.points[kAb], cfg_new.points[kAc],
                                                         ctx.tol).eval(m_target)));
  conc = std::max(conc, std::fabs(perpendicular_bisector(cfg_new.points[kBc], cfg_new.points[kBa],
                                                         ctx.tol).eval(m_target)));
  conc = std::max(conc, std::fabs(perpendicular_bisector(cfg_new.points[kCa], cfg_new.points[kCb],
                                                         ctx.tol).eval(m_target)));
  rep.add("perp_bisector_concurrence", conc / ctx.circumradius, thresholds::kScaffold);

  // (v) Chords the tangent circles cut near each vertex are parallel to the
  // opposite sides.
  double par = 0.0;
  par = std::max(par, parallel_residual(cfg_bui.points[kAc] - cfg_bui.points[kAb], t.c - t.b));
  par = std::max(par, parallel_residual(cfg_bui.points[kBa] - cfg_bui.points[kBc], t.a - t.c));
  par = std::max(par, parallel_residual(cfg_bui.points[kCb] - cfg_bui.points[kCa], t.b - t.a));
  rep.add("tangent_chord_parallel", par, thresholds::kScaffold);

  rep.outputs["pole_x"] = x.x;
  rep.outputs["pole_y"] = x.y;
  rep.finalize();
  return rep;
}

VerificationReport verify_spectrum(const TriangleContext& ctx) {
  require_ratio_defined(ctx);
  VerificationReport rep;
  rep.claim_id = "spectrum";
  rep.inputs_digest = triangle_digest(ctx.tri);
  Spectrum<double> sp = brocard_spectrum(ctx);
  const std::array<double, 5> expected = {0.5, 0.0, -0.5, 0.25, 0.75};
  for (size_t i = 0; i < sp.entries.size(); ++i) {
    std::string name = std::string("ratio_") + circle_kind_name(sp.entries[i].kind);
    rep.add(name, std::fabs(sp.entries[i].ratio - expected[i]), thresholds::kSpectrum);
    rep.outputs[name] = sp.entries[i].ratio;
  }
  rep.add("open_slot", std::fabs(sp.open_slot + 0.25), thresholds::kSpectrum);
  rep.outputs["open_slot"] = sp.open_slot;
  rep.finalize();
  return rep;
}

VerificationReport verify_tucker_suite(const TriangleContext& ctx, int seeds, uint64_t seed) {
  require_ratio_defined(ctx);
  VerificationReport rep;
  rep.claim_id = "tucker-family";
  char digest[320];
  std::snprintf(digest, sizeof(digest), "%s;seed=%llu;seeds=%d", triangle_digest(ctx.tri).c_str(),
                static_cast<unsigned long long>(seed), seeds);
  rep.inputs_digest = digest;

  Rng rng(seed);
  double max_closure = 0.0, max_axis = 0.0, max_conc = 0.0;
  int degenerate = 0;
  for (int i = 0; i < seeds; ++i) {
    double s = rng.uniform(0.05, 0.95);
    try {
      TuckerSample sample = tucker_circle(ctx, s);
      TuckerHexagon hex = tucker_hexagon(ctx, s);
      max_closure = std::max(max_closure, hex.closure_residual);
      max_axis = std::max(max_axis, sample.axis_dist);
      max_conc = std::max(max_conc, sample.concyclicity);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateStep) throw;
      ++degenerate;
    }
  }
  rep.add("chain_closure", max_closure, thresholds::kTuckerClosure);
  rep.add("center_on_axis", max_axis, thresholds::kTuckerAxis);
  rep.add("vertices_concyclic", max_conc, thresholds::kConcyclicity);

  // The construction-defined circles embed in the family: the scan must
  // reproduce their radii at their center ratios.
  SixPointConfig first = first_lemoine(ctx, ctx.symmedian);
  SixPointConfig second = second_lemoine(ctx, ctx.symmedian);
  SixPointConfig bui = bui_circle(ctx, ctx.symmedian);
  auto radius_gap = [&](double t_target, const SixPointConfig& cfg) {
    std::vector<TuckerMatch> matches = tucker_radius_at(ctx, t_target);
    double want = cfg.fitted.radius();
    double gap = std::fabs(matches[0].radius - want);
    for (const TuckerMatch& m : matches) gap = std::min(gap, std::fabs(m.radius - want));
    return gap / ctx.circumradius;
  };
  rep.add("radius_match_first", radius_gap(0.5, first), thresholds::kTuckerRadius);
  rep.add("radius_match_second", radius_gap(0.0, second), thresholds::kTuckerRadius);
  rep.add("radius_match_bui", radius_gap(0.25, bui), thresholds::kTuckerRadius);

  rep.outputs["degenerate_seeds"] = static_cast<double>(degenerate);
  rep.outputs["radius_first"] = first.fitted.radius();
  rep.outputs["radius_second"] = second.fitted.radius();
  rep.outputs["radius_bui"] = bui.fitted.radius();
  rep.finalize();
  return rep;
}

namespace {

double sweep_objective(const TriangleContext& ctx, CircleKind kind, const Point& p) {
  try {
    return six_point_config(ctx, kind, p).residual;
  } catch (const Error&) {
    return 1e6;
  }
}

// Derivative-free simplex descent; the residual is cone-like near its minimum
// and not differentiable across construction-failure boundaries.
Point nelder_mead(const TriangleContext& ctx, CircleKind kind, Point start, double h) {
  struct V {
    Point p;
    double f;
  };
  auto eval = [&](const Point& p) { return V{p, sweep_objective(ctx, kind, p)}; };
  std::array<V, 3> s = {eval(start), eval({start.x + h, start.y}), eval({start.x, start.y + h})};
  for (int iter = 0; iter < 400; ++iter) {
    std::sort(s.begin(), s.end(), [](const V& a, const V& b) { return a.f < b.f; });
    double size = std::max(dist(s[0].p, s[1].p), std::max(dist(s[0].p, s[2].p), dist(s[1].p, s[2].p)));
    if (size < 1e-10 * ctx.circumradius) break;
    Point centroid_pt = midpoint(s[0].p, s[1].p);
    Point refl{2.0 * centroid_pt.x - s[2].p.x, 2.0 * centroid_pt.y - s[2].p.y};
    V vr = eval(refl);
    if (vr.f < s[0].f) {
      Point expand{2.0 * refl.x - centroid_pt.x, 2.0 * refl.y - centroid_pt.y};
      V ve = eval(expand);
      s[2] = ve.f < vr.f ? ve : vr;
    } else if (vr.f < s[1].f) {
      s[2] = vr;
    } else {
      Point con = midpoint(centroid_pt, s[2].p);
      V vc = eval(con);
      if (vc.f < s[2].f) {
        s[2] = vc;
      } else {
        s[1] = eval(midpoint(s[0].p, s[1].p));
        s[2] = eval(midpoint(s[0].p, s[2].p));
      }
    }
  }
  std::sort(s.begin(), s.end(), [](const V& a, const V& b) { return a.f < b.f; });
  return s[0].p;
}

SweepResult run_sweep(const TriangleContext& ctx, CircleKind kind, int grid_n) {
  SweepResult res;
  res.kind = kind;
  res.grid_n = grid_n;
  std::vector<Point> pivots = barycentric_grid(ctx.tri, grid_n);
  res.samples.reserve(pivots.size());
  bool have_min = false;
  res.far_min_residual = 1e300;
  for (const Point& p : pivots) {
    SweepSample sample{p, 0.0, false};
    try {
      sample.residual = six_point_config(ctx, kind, p).residual;
    } catch (const Error&) {
      sample.failed = true;
      sample.residual = -1.0;
      ++res.failure_count;
    }
    if (!sample.failed) {
      if (!have_min || sample.residual < res.argmin_residual) {
        res.argmin = p;
        res.argmin_residual = sample.residual;
        have_min = true;
      }
      if (dist(p, ctx.symmedian) > thresholds::kConverseExclusion * ctx.circumradius) {
        res.far_min_residual = std::min(res.far_min_residual, sample.residual);
        if (sample.residual <= thresholds::kConverseFarFloor) ++res.far_floor_violations;
      }
    }
    res.samples.push_back(sample);
  }
  if (!have_min) fail(ErrorCode::InvalidArgument, "sweep produced no valid samples");
  res.residual_at_l = six_point_config(ctx, kind, ctx.symmedian).residual;

  double longest = std::max({dist(ctx.tri.a, ctx.tri.b), dist(ctx.tri.b, ctx.tri.c),
                             dist(ctx.tri.c, ctx.tri.a)});
  double h = 0.5 * longest / (grid_n - 1);
  res.refined = nelder_mead(ctx, kind, res.argmin, h);
  res.refined_residual = sweep_objective(ctx, kind, res.refined);
  res.refined_dist_to_l = dist(res.refined, ctx.symmedian) / ctx.circumradius;
  return res;
}

}  // namespace

SweepResult converse_sweep(const TriangleContext& ctx, int grid_n) {
  return run_sweep(ctx, CircleKind::New, grid_n);
}

SweepResult uniqueness_sweep(const TriangleContext& ctx, CircleKind kind, int grid_n) {
  if (kind == CircleKind::New)
    fail(ErrorCode::InvalidArgument, "uniqueness sweep applies to the known constructions");
  return run_sweep(ctx, kind, grid_n);
}

VerificationReport sweep_to_report(const SweepResult& sweep, const TriangleContext& ctx) {
  VerificationReport rep;
  rep.claim_id = sweep.kind == CircleKind::New
                     ? "converse"
                     : std::string("uniqueness.") + circle_kind_name(sweep.kind);
  char digest[320];
  std::snprintf(digest, sizeof(digest), "%s;grid=%d", triangle_digest(ctx.tri).c_str(),
                sweep.grid_n);
  rep.inputs_digest = digest;
  rep.add("residual_at_pivot", sweep.residual_at_l, thresholds::kResidualAtPivot);
  rep.add("far_floor_violations", static_cast<double>(sweep.far_floor_violations), 0.0);
  rep.add("refined_dist_to_l", sweep.refined_dist_to_l,
          sweep.kind == CircleKind::New ? thresholds::kConverseRefineDist
                                        : thresholds::kArgminDist);
  rep.outputs["argmin_x"] = sweep.argmin.x;
  rep.outputs["argmin_y"] = sweep.argmin.y;
  rep.outputs["argmin_residual"] = sweep.argmin_residual;
  rep.outputs["far_min_residual"] = sweep.far_min_residual;
  rep.outputs["failures"] = static_cast<double>(sweep.failure_count);
  rep.outputs["samples"] = static_cast<double>(sweep.samples.size());
  rep.outputs["refined_x"] = sweep.refined.x;
  rep.outputs["refined_y"] = sweep.refined.y;
  rep.outputs["refined_residual"] = sweep.refined_residual;
  rep.finalize();
  return rep;
}

namespace {

// Fold per-trial reports into one: same residual names, worst value wins.
VerificationReport aggregate_trials(const std::string& claim_id,
                                    const std::vector<VerificationReport>& trials,
                                    const std::string& digest) {
  VerificationReport rep;
  rep.claim_id = claim_id;
  rep.inputs_digest = digest;
  std::map<std::string, NamedResidual> worst;
  for (const VerificationReport& r : trials) {
    for (const NamedResidual& nr : r.residuals) {
      auto it = worst.find(nr.name);
      if (it == worst.end() || nr.value > it->second.value) worst[nr.name] = nr;
    }
  }
  for (const auto& [name, nr] : worst) rep.add(name, nr.value, nr.threshold);
  rep.outputs["trials"] = static_cast<double>(trials.size());
  rep.finalize();
  return rep;
}

}  // namespace

RunAllResult run_all(const TriangleContext& ctx, const RunAllOptions& opts) {
  if (opts.trials < 1) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
  RunAllResult result;
  char digest[360];
  std::snprintf(digest, sizeof(digest), "%s;seed=%llu;trials=%d;grid=%d",
                triangle_digest(ctx.tri).c_str(), static_cast<unsigned long long>(opts.seed),
                opts.trials, opts.grid_n);

  auto push_fixed = [&](VerificationReport rep) {
    rep.claim_id += ".fixed";
    result.reports.push_back(std::move(rep));
  };
  push_fixed(verify_theorem_new(ctx));
  push_fixed(verify_lemma_circumcevian(ctx));
  push_fixed(verify_proof_scaffold(ctx));
  push_fixed(verify_spectrum(ctx));
  push_fixed(verify_tucker_suite(ctx, opts.tucker_seeds, opts.seed));
  push_fixed(sweep_to_report(converse_sweep(ctx, opts.grid_n), ctx));
  for (CircleKind kind :
       {CircleKind::First, CircleKind::Second, CircleKind::Third, CircleKind::Bui})
    push_fixed(sweep_to_report(uniqueness_sweep(ctx, kind, opts.grid_n), ctx));
  push_fixed(verify_precision(ctx));

  Rng rng(opts.seed);
  RandomTriangleOptions tri_opts;
  tri_opts.min_ol_over_r = 0.01;
  std::vector<VerificationReport> thm, lem, scaf, spectra;
  int construction_failures = 0;
  for (int i = 0; i < opts.trials; ++i) {
    Triangle t = random_triangle(rng, tri_opts);
    try {
      TriangleContext tctx = TriangleContext::make(t, ctx.tol.eps_rel);
      thm.push_back(verify_theorem_new(tctx));
      lem.push_back(verify_lemma_circumcevian(tctx));
      scaf.push_back(verify_proof_scaffold(tctx));
      spectra.push_back(verify_spectrum(tctx));
    } catch (const Error&) {
      ++construction_failures;
    }
  }
  std::string rand_digest = std::string("random;") + digest;
  VerificationReport agg = aggregate_trials("new-circle.random", thm, rand_digest);
  agg.add("construction_failures", static_cast<double>(construction_failures), 0.0);
  agg.finalize();
  result.reports.push_back(agg);
  result.reports.push_back(aggregate_trials("cevian-lemoine.random", lem, rand_digest));
  result.reports.push_back(aggregate_trials("proof-scaffold.random", scaf, rand_digest));
  result.reports.push_back(aggregate_trials("spectrum.random", spectra, rand_digest));

  for (VerificationReport& r : result.reports)
    if (r.inputs_digest.empty()) r.inputs_digest = digest;
  std::sort(result.reports.begin(), result.reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              return a.claim_id < b.claim_id;
            });
  result.pass = true;
  for (const VerificationReport& r : result.reports) result.pass = result.pass && r.pass;
  return result;
}

}  // namespace lemoine

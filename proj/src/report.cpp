#include "lemoine/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "lemoine/bigfloat.hpp"

namespace lemoine {

namespace {

Json point_json(const Point& p) {
  Json a = Json::array();
  a.push(Json::num(p.x));
  a.push(Json::num(p.y));
  return a;
}

Json circle_json(const Circle& c) {
  Json j = Json::object();
  j.set("center", point_json(c.center));
  j.set("r2", Json::num(c.r2));
  j.set("radius", Json::num(c.radius()));
  return j;
}

Json line_json(const Line& l) {
  Json j = Json::object();
  j.set("nx", Json::num(l.nx));
  j.set("ny", Json::num(l.ny));
  j.set("c", Json::num(l.c));
  return j;
}

Json triangle_json(const Triangle& t) {
  Json a = Json::array();
  for (double v : {t.a.x, t.a.y, t.b.x, t.b.y, t.c.x, t.c.y}) a.push(Json::num(v));
  return a;
}

Json inputs_json(const Triangle& tri, double eps_rel, unsigned prec_bits) {
  Json j = Json::object();
  j.set("triangle", triangle_json(tri));
  j.set("eps_rel", Json::num(eps_rel));
  j.set("backend", prec_bits == 0 ? Json::str("binary64")
                                  : Json::str("bigfloat" + std::to_string(prec_bits)));
  return j;
}

Point round_pt(const Pt<BigFloat>& p) { return {p.x.to_double(), p.y.to_double()}; }
Point round_pt(const Point& p) { return p; }
double round_s(const BigFloat& v) { return v.to_double(); }
double round_s(double v) { return v; }

template <class S>
Circle round_circ(const Circ<S>& c) {
  return {round_pt(c.center), round_s(c.r2)};
}

template <class S>
Line round_line(const Ln<S>& l) {
  return {round_s(l.nx), round_s(l.ny), round_s(l.c)};
}

template <class S>
SixPointConfig round_cfg(const SixPointCfg<S>& cfg) {
  SixPointConfig out;
  out.kind = cfg.kind;
  out.pivot = round_pt(cfg.pivot);
  for (size_t i = 0; i < cfg.points.size(); ++i) out.points[i] = round_pt(cfg.points[i]);
  out.fitted = round_circ(cfg.fitted);
  out.residual = round_s(cfg.residual);
  if (cfg.ratio) out.ratio = round_s(*cfg.ratio);
  for (const auto& l : cfg.trace.lines) out.trace.lines.push_back(round_line(l));
  for (const auto& c : cfg.trace.circles) out.trace.circles.push_back(round_circ(c));
  if (cfg.trace.cevian)
    out.trace.cevian = CevianTriple<double>{round_pt(cfg.trace.cevian->a_p),
                                            round_pt(cfg.trace.cevian->b_p),
                                            round_pt(cfg.trace.cevian->c_p)};
  return out;
}

template <class S>
Tri<S> widen_triangle(const Triangle& t) {
  return {{S(t.a.x), S(t.a.y)}, {S(t.b.x), S(t.b.y)}, {S(t.c.x), S(t.c.y)}};
}

template <class S>
CentersView centers_view_impl(const Triangle& tri, double eps_rel) {
  TriangleCtx<S> ctx = TriangleCtx<S>::make(widen_triangle<S>(tri), S(eps_rel));
  CentersView view;
  view.o = round_pt(ctx.cd.o);
  view.l = round_pt(ctx.symmedian);
  view.g = round_pt(ctx.gcenter);
  view.r2 = round_s(ctx.cd.r2);
  view.circumradius = round_s(ctx.circumradius);
  view.axis_defined = !ctx.equilateral_like();
  if (view.axis_defined)
    view.axis = round_line(brocard_axis_line(ctx.cd.o, ctx.symmedian, ctx.tol));
  const std::array<CircleKind, 5> kinds = {CircleKind::First, CircleKind::Second,
                                           CircleKind::Third, CircleKind::Bui, CircleKind::New};
  for (size_t i = 0; i < kinds.size(); ++i) {
    SixPointCfg<S> cfg = six_point_config(ctx, kinds[i], ctx.symmedian);
    view.centers[i] = round_pt(cfg.fitted.center);
    if (cfg.ratio) view.ratios[i] = round_s(*cfg.ratio);
  }
  view.open_slot = midpoint(view.centers[1], view.centers[2]);
  return view;
}

template <class S>
SixPointConfig circle_config_impl(const Triangle& tri, double eps_rel, CircleKind kind,
                                  std::optional<Point> pivot) {
  TriangleCtx<S> ctx = TriangleCtx<S>::make(widen_triangle<S>(tri), S(eps_rel));
  Pt<S> p = pivot ? Pt<S>{S(pivot->x), S(pivot->y)} : ctx.symmedian;
  return round_cfg(six_point_config(ctx, kind, p));
}

}  // namespace

CentersView centers_view(const Triangle& tri, double eps_rel, unsigned prec_bits) {
  if (prec_bits == 0) return centers_view_impl<double>(tri, eps_rel);
  PrecisionGuard guard(static_cast<mpfr_prec_t>(prec_bits));
  return centers_view_impl<BigFloat>(tri, eps_rel);
}

SixPointConfig circle_config_computed(const Triangle& tri, double eps_rel, CircleKind kind,
                                      std::optional<Point> pivot, unsigned prec_bits) {
  if (prec_bits == 0) return circle_config_impl<double>(tri, eps_rel, kind, pivot);
  PrecisionGuard guard(static_cast<mpfr_prec_t>(prec_bits));
  return circle_config_impl<BigFloat>(tri, eps_rel, kind, pivot);
}

Json centers_report(const Triangle& tri, double eps_rel, unsigned prec_bits) {
  CentersView view = centers_view(tri, eps_rel, prec_bits);
  Json out = Json::object();
  out.set("O", point_json(view.o));
  out.set("L", point_json(view.l));
  out.set("centroid", point_json(view.g));
  out.set("r2", Json::num(view.r2));
  out.set("R", Json::num(view.circumradius));
  out.set("axis_defined", Json::boolean(view.axis_defined));
  out.set("brocard_axis", view.axis_defined ? line_json(view.axis) : Json::null());

  static constexpr std::array<const char*, 5> kCenterNames = {"M1", "M2", "M3", "M4", "M5"};
  static constexpr std::array<CircleKind, 5> kKinds = {CircleKind::First, CircleKind::Second,
                                                       CircleKind::Third, CircleKind::Bui,
                                                       CircleKind::New};
  Json centers = Json::object();
  Json ratios = Json::object();
  for (size_t i = 0; i < 5; ++i) {
    centers.set(kCenterNames[i], point_json(view.centers[i]));
    ratios.set(circle_kind_name(kKinds[i]),
               view.ratios[i] ? Json::num(*view.ratios[i]) : Json::null());
  }
  centers.set("open_slot", point_json(view.open_slot));
  out.set("centers", centers);
  out.set("ratios", ratios);

  Json rep = Json::object();
  rep.set("kind", Json::str("centers"));
  rep.set("inputs", inputs_json(tri, eps_rel, prec_bits));
  rep.set("outputs", out);
  rep.set("residuals", Json::object());
  rep.set("pass", Json::boolean(true));
  return rep;
}

Json circle_report(const Triangle& tri, double eps_rel, CircleKind kind,
                   std::optional<Point> pivot, unsigned prec_bits) {
  SixPointConfig cfg = circle_config_computed(tri, eps_rel, kind, pivot, prec_bits);

  Json points = Json::object();
  for (size_t i = 0; i < cfg.points.size(); ++i)
    points.set(kSixPointLabels[i], point_json(cfg.points[i]));

  Json trace = Json::object();
  Json circles = Json::array();
  for (const Circle& c : cfg.trace.circles) circles.push(circle_json(c));
  trace.set("circles", circles);
  Json lines = Json::array();
  for (const Line& l : cfg.trace.lines) lines.push(line_json(l));
  trace.set("lines", lines);
  if (cfg.trace.cevian) {
    Json cev = Json::object();
    cev.set("A_prime", point_json(cfg.trace.cevian->a_p));
    cev.set("B_prime", point_json(cfg.trace.cevian->b_p));
    cev.set("C_prime", point_json(cfg.trace.cevian->c_p));
    trace.set("cevian", cev);
  } else {
    trace.set("cevian", Json::null());
  }

  Tolerance tol{eps_rel, 1.0};
  bool concyclic = cfg.residual <= thresholds::kConcyclicity;
  Json out = Json::object();
  out.set("points", points);
  out.set("fitted", circle_json(cfg.fitted));
  out.set("lsq", circle_json(fit_circle_lsq(cfg.point_list(), tol)));
  out.set("concyclic", Json::boolean(concyclic));
  out.set("ratio", cfg.ratio ? Json::num(*cfg.ratio) : Json::null());
  out.set("trace", trace);

  Json inputs = inputs_json(tri, eps_rel, prec_bits);
  inputs.set("pivot", point_json(cfg.pivot));
  inputs.set("pivot_is_symmedian", Json::boolean(!pivot.has_value()));

  Json residuals = Json::object();
  residuals.set("concyclicity", Json::num(cfg.residual));

  Json rep = Json::object();
  rep.set("kind", Json::str(std::string("circle.") + circle_kind_name(kind)));
  rep.set("inputs", inputs);
  rep.set("outputs", out);
  rep.set("residuals", residuals);
  rep.set("pass", Json::boolean(concyclic));
  return rep;
}

Json tucker_report(const TriangleContext& ctx, double s) {
  TuckerHexagon hex = tucker_hexagon(ctx, s);
  TuckerSample sample = tucker_circle(ctx, s);

  static constexpr std::array<const char*, 6> kChainLabels = {"B_a", "C_a", "C_b",
                                                              "A_b", "A_c", "B_c"};
  Json verts = Json::object();
  for (size_t i = 0; i < hex.vertices.size(); ++i)
    verts.set(kChainLabels[i], point_json(hex.vertices[i]));

  Json out = Json::object();
  out.set("vertices", verts);
  out.set("circle", circle_json(sample.circle));
  out.set("radius", Json::num(sample.radius));
  out.set("t", sample.t ? Json::num(*sample.t) : Json::null());

  Json residuals = Json::object();
  residuals.set("closure_residual", Json::num(hex.closure_residual));
  residuals.set("concyclicity", Json::num(sample.concyclicity));
  residuals.set("center_on_axis", Json::num(sample.axis_dist));

  bool pass = hex.closure_residual <= thresholds::kTuckerClosure &&
              sample.concyclicity <= thresholds::kConcyclicity;

  Json inputs = inputs_json(ctx.tri, ctx.tol.eps_rel, 0);
  inputs.set("s", Json::num(s));

  Json rep = Json::object();
  rep.set("kind", Json::str("circle.tucker"));
  rep.set("inputs", inputs);
  rep.set("outputs", out);
  rep.set("residuals", residuals);
  rep.set("pass", Json::boolean(pass));
  return rep;
}

Json hunt_report(const TriangleContext& ctx) {
  Json solutions = Json::array();
  bool out_of_range = false;
  std::vector<TuckerMatch> matches;
  try {
    matches = tucker_radius_at(ctx, -0.25);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TargetOutOfRange) throw;
    out_of_range = true;
  }
  for (const TuckerMatch& m : matches) {
    Json sol = Json::object();
    sol.set("s", Json::num(m.s));
    sol.set("t", Json::num(m.t));
    sol.set("radius", Json::num(m.radius));
    TuckerHexagon hex = tucker_hexagon(ctx, m.s);
    Json verts = Json::array();
    for (const Point& v : hex.vertices) verts.push(point_json(v));
    sol.set("hexagon", verts);
    solutions.push(sol);
  }

  Json out = Json::object();
  out.set("open_problem", Json::boolean(true));
  out.set("t_target", Json::num(-0.25));
  out.set("found", Json::num(static_cast<double>(matches.size())));
  out.set("out_of_range", Json::boolean(out_of_range));
  out.set("solutions", solutions);

  Json rep = Json::object();
  rep.set("kind", Json::str("hunt-midpoint"));
  rep.set("inputs", inputs_json(ctx.tri, ctx.tol.eps_rel, 0));
  rep.set("outputs", out);
  rep.set("residuals", Json::object());
  rep.set("pass", Json::boolean(true));
  return rep;
}

Json report_to_json(const VerificationReport& rep) {
  Json residuals = Json::object();
  Json limits = Json::object();
  for (const NamedResidual& r : rep.residuals) {
    residuals.set(r.name, Json::num(r.value));
    limits.set(r.name, Json::num(r.threshold));
  }
  Json out = Json::object();
  for (const auto& [k, v] : rep.outputs) out.set(k, Json::num(v));
  out.set("thresholds", limits);

  Json inputs = Json::object();
  inputs.set("digest", Json::str(rep.inputs_digest));

  Json j = Json::object();
  j.set("claim_id", Json::str(rep.claim_id));
  j.set("inputs", inputs);
  j.set("outputs", out);
  j.set("residuals", residuals);
  j.set("pass", Json::boolean(rep.pass));
  return j;
}

Json sweep_report_json(const SweepResult& sweep, const TriangleContext& ctx) {
  Json samples = Json::array();
  for (const SweepSample& s : sweep.samples) {
    Json row = Json::array();
    row.push(Json::num(s.pivot.x));
    row.push(Json::num(s.pivot.y));
    row.push(Json::num(s.failed ? -1.0 : s.residual));
    samples.push(row);
  }
  Json rep = Json::object();
  VerificationReport r = sweep_to_report(sweep, ctx);
  Json residuals = Json::object();
  Json limits = Json::object();
  for (const NamedResidual& nr : r.residuals) {
    residuals.set(nr.name, Json::num(nr.value));
    limits.set(nr.name, Json::num(nr.threshold));
  }
  Json out = Json::object();
  for (const auto& [k, v] : r.outputs) out.set(k, Json::num(v));
  out.set("thresholds", limits);
  out.set("grid", samples);
  Json inputs = Json::object();
  inputs.set("digest", Json::str(r.inputs_digest));
  rep.set("claim_id", Json::str(r.claim_id));
  rep.set("inputs", inputs);
  rep.set("outputs", out);
  rep.set("residuals", residuals);
  rep.set("pass", Json::boolean(r.pass));
  return rep;
}

VerifyOutcome run_verify(const TriangleContext& ctx, const std::string& which, int trials,
                         int grid_n, uint64_t seed, unsigned prec_bits) {
  VerifyOutcome outcome;
  auto single = [&](VerificationReport rep) {
    outcome.all_pass = rep.pass;
    outcome.json = report_to_json(rep);
  };
  if (which == "all") {
    RunAllOptions opts;
    opts.trials = trials >= 0 ? trials : 100;
    opts.seed = seed;
    opts.grid_n = grid_n >= 0 ? grid_n : 33;
    RunAllResult res = run_all(ctx, opts);
    Json reports = Json::array();
    for (const VerificationReport& r : res.reports) reports.push(report_to_json(r));
    Json out = Json::object();
    out.set("reports", reports);
    out.set("count", Json::num(static_cast<double>(res.reports.size())));
    Json inputs = Json::object();
    inputs.set("digest", Json::str(triangle_digest(ctx.tri)));
    inputs.set("seed", Json::num(static_cast<double>(seed)));
    inputs.set("trials", Json::num(static_cast<double>(opts.trials)));
    inputs.set("grid", Json::num(static_cast<double>(opts.grid_n)));
    Json j = Json::object();
    j.set("claim_id", Json::str("all"));
    j.set("inputs", inputs);
    j.set("outputs", out);
    j.set("residuals", Json::object());
    j.set("pass", Json::boolean(res.pass));
    outcome.all_pass = res.pass;
    outcome.json = j;
  } else if (which == "thm-new") {
    single(verify_theorem_new(ctx));
  } else if (which == "lemma") {
    single(verify_lemma_circumcevian(ctx));
  } else if (which == "scaffold") {
    single(verify_proof_scaffold(ctx));
  } else if (which == "spectrum") {
    single(verify_spectrum(ctx));
  } else if (which == "tucker") {
    single(verify_tucker_suite(ctx, trials >= 0 ? trials : 200, seed));
  } else if (which == "precision") {
    single(verify_precision(ctx, prec_bits ? prec_bits : 128));
  } else if (which == "converse") {
    SweepResult sweep = converse_sweep(ctx, grid_n >= 0 ? grid_n : 33);
    VerificationReport rep = sweep_to_report(sweep, ctx);
    outcome.all_pass = rep.pass;
    outcome.json = sweep_report_json(sweep, ctx);
  } else if (which == "uniqueness") {
    bool pass = true;
    Json reports = Json::array();
    for (CircleKind kind :
         {CircleKind::First, CircleKind::Second, CircleKind::Third, CircleKind::Bui}) {
      SweepResult sweep = uniqueness_sweep(ctx, kind, grid_n >= 0 ? grid_n : 33);
      VerificationReport rep = sweep_to_report(sweep, ctx);
      pass = pass && rep.pass;
      reports.push(sweep_report_json(sweep, ctx));
    }
    Json out = Json::object();
    out.set("reports", reports);
    Json inputs = Json::object();
    inputs.set("digest", Json::str(triangle_digest(ctx.tri)));
    Json j = Json::object();
    j.set("claim_id", Json::str("uniqueness"));
    j.set("inputs", inputs);
    j.set("outputs", out);
    j.set("residuals", Json::object());
    j.set("pass", Json::boolean(pass));
    outcome.all_pass = pass;
    outcome.json = j;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown verify selector: " + which);
  }
  return outcome;
}

std::string render_text(const Json& j) { return j.dump_pretty(); }

std::string centers_text(const CentersView& view) {
  char buf[256];
  std::string out;
  auto line = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof(buf), fmt, args...);
    out += buf;
    out += '\n';
  };
  line("O        = (%.17g, %.17g)", view.o.x, view.o.y);
  line("L        = (%.17g, %.17g)", view.l.x, view.l.y);
  line("centroid = (%.17g, %.17g)", view.g.x, view.g.y);
  line("r2       = %.17g", view.r2);
  if (view.axis_defined) {
    line("brocard axis: %.17g*x + %.17g*y = %.17g", view.axis.nx, view.axis.ny, view.axis.c);
  } else {
    out += "brocard axis: undefined (O = L)\n";
  }
  static constexpr std::array<const char*, 5> kCenterNames = {"M1", "M2", "M3", "M4", "M5"};
  static constexpr std::array<const char*, 5> kKindNames = {"first", "second", "third", "bui",
                                                            "new"};
  for (size_t i = 0; i < 5; ++i) {
    if (view.ratios[i]) {
      line("%s (%s) = (%.17g, %.17g)  ratio: %.17g", kCenterNames[i], kKindNames[i],
           view.centers[i].x, view.centers[i].y, *view.ratios[i]);
    } else {
      line("%s (%s) = (%.17g, %.17g)  ratio: undefined (O = L)", kCenterNames[i], kKindNames[i],
           view.centers[i].x, view.centers[i].y);
    }
  }
  return out;
}

}  // namespace lemoine

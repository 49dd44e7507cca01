#include "lemoine/lemoine.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "lemoine/figures.hpp"
#include "lemoine/report.hpp"

using namespace lemoine;

struct lemoine_ctx {
  Triangle tri{};
  double eps_rel = kDefaultEpsRel;
  unsigned prec_bits = 0;
  lemoine_status status = LEMOINE_OK;
  std::string error;
  std::optional<TriangleContext> cctx;

  void rebuild() {
    status = LEMOINE_OK;
    error.clear();
    cctx.reset();
    try {
      cctx = TriangleContext::make(tri, eps_rel);
    } catch (const Error& e) {
      status = to_status(e.code());
      error = e.what();
    } catch (const std::exception& e) {
      status = LEMOINE_E_INTERNAL;
      error = e.what();
    }
  }

  static lemoine_status to_status(ErrorCode code) {
    switch (code) {
      case ErrorCode::DegenerateInput: return LEMOINE_E_DEGENERATE_INPUT;
      case ErrorCode::ParallelLines: return LEMOINE_E_PARALLEL_LINES;
      case ErrorCode::CollinearPoints: return LEMOINE_E_COLLINEAR_POINTS;
      case ErrorCode::NotConcyclic: return LEMOINE_E_NOT_CONCYCLIC;
      case ErrorCode::CoincidentPoints: return LEMOINE_E_COINCIDENT_POINTS;
      case ErrorCode::PointNotOnCircle: return LEMOINE_E_POINT_NOT_ON_CIRCLE;
      case ErrorCode::DegenerateTangency: return LEMOINE_E_DEGENERATE_TANGENCY;
      case ErrorCode::AntipodalChord: return LEMOINE_E_ANTIPODAL_CHORD;
      case ErrorCode::DegenerateBase: return LEMOINE_E_DEGENERATE_BASE;
      case ErrorCode::NotCollinear: return LEMOINE_E_NOT_COLLINEAR;
      case ErrorCode::PointOutsideCircle: return LEMOINE_E_POINT_OUTSIDE_CIRCLE;
      case ErrorCode::PointAtVertex: return LEMOINE_E_POINT_AT_VERTEX;
      case ErrorCode::PoleAtInfinity: return LEMOINE_E_POLE_AT_INFINITY;
      case ErrorCode::EquilateralDegenerate: return LEMOINE_E_EQUILATERAL_DEGENERATE;
      case ErrorCode::DegeneratePivot: return LEMOINE_E_DEGENERATE_PIVOT;
      case ErrorCode::TangentialDegeneracy: return LEMOINE_E_TANGENTIAL_DEGENERACY;
      case ErrorCode::NoRealIntersection: return LEMOINE_E_NO_REAL_INTERSECTION;
      case ErrorCode::DegenerateStep: return LEMOINE_E_DEGENERATE_STEP;
      case ErrorCode::TargetOutOfRange: return LEMOINE_E_TARGET_OUT_OF_RANGE;
      case ErrorCode::NonFinite: return LEMOINE_E_NON_FINITE;
      case ErrorCode::InvalidArgument: return LEMOINE_E_INVALID_ARGUMENT;
    }
    return LEMOINE_E_INTERNAL;
  }
};

namespace {

template <class Fn>
lemoine_status guarded(lemoine_ctx* ctx, Fn&& fn) {
  if (!ctx) return LEMOINE_E_INVALID_ARGUMENT;
  if (ctx->status != LEMOINE_OK) return ctx->status;
  try {
    fn(*ctx->cctx);
    return LEMOINE_OK;
  } catch (const Error& e) {
    ctx->error = e.what();
    return lemoine_ctx::to_status(e.code());
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return LEMOINE_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<CircleKind> kind_from_int(lemoine_circle_kind kind) {
  switch (kind) {
    case LEMOINE_CIRCLE_FIRST: return CircleKind::First;
    case LEMOINE_CIRCLE_SECOND: return CircleKind::Second;
    case LEMOINE_CIRCLE_THIRD: return CircleKind::Third;
    case LEMOINE_CIRCLE_BUI: return CircleKind::Bui;
    case LEMOINE_CIRCLE_NEW: return CircleKind::New;
  }
  return std::nullopt;
}

std::optional<CircleKind> kind_from_name(const char* name) {
  if (!name) return std::nullopt;
  std::string k = name;
  if (k == "first") return CircleKind::First;
  if (k == "second") return CircleKind::Second;
  if (k == "third") return CircleKind::Third;
  if (k == "bui") return CircleKind::Bui;
  if (k == "new") return CircleKind::New;
  return std::nullopt;
}

}  // namespace

extern "C" {

lemoine_ctx* lemoine_ctx_new(double ax, double ay, double bx, double by, double cx, double cy) {
  auto* ctx = new (std::nothrow) lemoine_ctx;
  if (!ctx) return nullptr;
  ctx->tri = Triangle{{ax, ay}, {bx, by}, {cx, cy}};
  ctx->rebuild();
  return ctx;
}

lemoine_ctx* lemoine_ctx_new_random(uint64_t seed) {
  auto* ctx = new (std::nothrow) lemoine_ctx;
  if (!ctx) return nullptr;
  try {
    Rng rng(seed);
    ctx->tri = random_triangle(rng);
    ctx->rebuild();
  } catch (const Error& e) {
    ctx->status = lemoine_ctx::to_status(e.code());
    ctx->error = e.what();
  }
  return ctx;
}

void lemoine_ctx_free(lemoine_ctx* ctx) { delete ctx; }

lemoine_status lemoine_ctx_status(const lemoine_ctx* ctx) {
  return ctx ? ctx->status : LEMOINE_E_INVALID_ARGUMENT;
}

const char* lemoine_ctx_error(const lemoine_ctx* ctx) { return ctx ? ctx->error.c_str() : ""; }

lemoine_status lemoine_ctx_set_eps(lemoine_ctx* ctx, double eps_rel) {
  if (!ctx) return LEMOINE_E_INVALID_ARGUMENT;
  if (!(eps_rel > 0.0) || !(eps_rel < 1.0)) return LEMOINE_E_INVALID_ARGUMENT;
  ctx->eps_rel = eps_rel;
  ctx->rebuild();
  return ctx->status;
}

lemoine_status lemoine_ctx_set_backend(lemoine_ctx* ctx, unsigned prec_bits) {
  if (!ctx) return LEMOINE_E_INVALID_ARGUMENT;
  if (prec_bits != 0 && prec_bits < 64) return LEMOINE_E_INVALID_ARGUMENT;
  ctx->prec_bits = prec_bits;
  return LEMOINE_OK;
}

lemoine_status lemoine_ctx_triangle(const lemoine_ctx* ctx, double out_xy[6]) {
  if (!ctx || !out_xy) return LEMOINE_E_INVALID_ARGUMENT;
  out_xy[0] = ctx->tri.a.x;
  out_xy[1] = ctx->tri.a.y;
  out_xy[2] = ctx->tri.b.x;
  out_xy[3] = ctx->tri.b.y;
  out_xy[4] = ctx->tri.c.x;
  out_xy[5] = ctx->tri.c.y;
  return LEMOINE_OK;
}

lemoine_status lemoine_get_centers(lemoine_ctx* ctx, lemoine_centers* out) {
  if (!out) return LEMOINE_E_INVALID_ARGUMENT;
  return guarded(ctx, [&](TriangleContext& c) {
    out->ox = c.cd.o.x;
    out->oy = c.cd.o.y;
    out->r2 = c.cd.r2;
    out->lx = c.symmedian.x;
    out->ly = c.symmedian.y;
    out->gx = c.gcenter.x;
    out->gy = c.gcenter.y;
    out->axis_defined = c.equilateral_like() ? 0 : 1;
    out->axis_nx = out->axis_ny = out->axis_c = 0.0;
    if (out->axis_defined) {
      Line axis = brocard_axis_line(c.cd.o, c.symmedian, c.tol);
      out->axis_nx = axis.nx;
      out->axis_ny = axis.ny;
      out->axis_c = axis.c;
    }
  });
}

lemoine_status lemoine_get_circle(lemoine_ctx* ctx, lemoine_circle_kind kind,
                                  const double* pivot_xy, lemoine_sixpoint* out) {
  if (!out) return LEMOINE_E_INVALID_ARGUMENT;
  std::optional<CircleKind> k = kind_from_int(kind);
  if (!k) return LEMOINE_E_INVALID_ARGUMENT;
  return guarded(ctx, [&](TriangleContext& c) {
    std::optional<Point> pivot;
    if (pivot_xy) pivot = Point{pivot_xy[0], pivot_xy[1]};
    SixPointConfig cfg =
        circle_config_computed(c.tri, c.tol.eps_rel, *k, pivot, ctx->prec_bits);
    for (size_t i = 0; i < 6; ++i) {
      out->px[i] = cfg.points[i].x;
      out->py[i] = cfg.points[i].y;
    }
    out->cx = cfg.fitted.center.x;
    out->cy = cfg.fitted.center.y;
    out->r2 = cfg.fitted.r2;
    out->residual = cfg.residual;
    out->has_ratio = cfg.ratio ? 1 : 0;
    out->ratio = cfg.ratio.value_or(0.0);
  });
}

lemoine_status lemoine_get_tucker(lemoine_ctx* ctx, double s, lemoine_tucker_sample* out) {
  if (!out) return LEMOINE_E_INVALID_ARGUMENT;
  return guarded(ctx, [&](TriangleContext& c) {
    TuckerHexagon hex = tucker_hexagon(c, s);
    TuckerSample sample = tucker_circle(c, s);
    for (size_t i = 0; i < 6; ++i) {
      out->vx[i] = hex.vertices[i].x;
      out->vy[i] = hex.vertices[i].y;
    }
    out->closure_residual = hex.closure_residual;
    out->cx = sample.circle.center.x;
    out->cy = sample.circle.center.y;
    out->r2 = sample.circle.r2;
    out->radius = sample.radius;
    out->has_t = sample.t ? 1 : 0;
    out->t = sample.t.value_or(0.0);
  });
}

lemoine_status lemoine_get_spectrum(lemoine_ctx* ctx, double out_ratios[6]) {
  if (!out_ratios) return LEMOINE_E_INVALID_ARGUMENT;
  return guarded(ctx, [&](TriangleContext& c) {
    Spectrum<double> sp = brocard_spectrum(c);
    for (size_t i = 0; i < 5; ++i) out_ratios[i] = sp.entries[i].ratio;
    out_ratios[5] = sp.open_slot;
  });
}

lemoine_status lemoine_tucker_radius_at(lemoine_ctx* ctx, double t_target,
                                        lemoine_tucker_match* out, size_t cap, size_t* count) {
  if (!count) return LEMOINE_E_INVALID_ARGUMENT;
  return guarded(ctx, [&](TriangleContext& c) {
    std::vector<TuckerMatch> matches = tucker_radius_at(c, t_target);
    *count = matches.size();
    if (out) {
      for (size_t i = 0; i < matches.size() && i < cap; ++i)
        out[i] = {matches[i].s, matches[i].t, matches[i].radius};
    }
  });
}

lemoine_status lemoine_is_tucker(lemoine_ctx* ctx, double cx, double cy, double r2, int* verdict,
                                 double* margin) {
  if (!verdict || !margin) return LEMOINE_E_INVALID_ARGUMENT;
  if (!(r2 > 0.0)) return LEMOINE_E_INVALID_ARGUMENT;
  return guarded(ctx, [&](TriangleContext& c) {
    TuckerVerdict v = is_tucker(c, Circle{{cx, cy}, r2});
    *verdict = v.is_tucker ? 1 : 0;
    *margin = v.margin;
  });
}

char* lemoine_cmd_centers(lemoine_ctx* ctx, int as_json, lemoine_status* st) {
  std::string result;
  lemoine_status s = guarded(ctx, [&](TriangleContext& c) {
    if (as_json) {
      result = centers_report(c.tri, c.tol.eps_rel, ctx->prec_bits).dump();
    } else {
      result = centers_text(centers_view(c.tri, c.tol.eps_rel, ctx->prec_bits));
    }
  });
  if (st) *st = s;
  return s == LEMOINE_OK ? dup_string(result) : nullptr;
}

char* lemoine_cmd_circle(lemoine_ctx* ctx, const char* kind, const double* pivot_xy,
                         double tucker_s, int as_json, lemoine_status* st) {
  std::string result;
  lemoine_status s = guarded(ctx, [&](TriangleContext& c) {
    Json j;
    if (kind && std::string(kind) == "tucker") {
      j = tucker_report(c, tucker_s);
    } else {
      std::optional<CircleKind> k = kind_from_name(kind);
      if (!k) fail(ErrorCode::InvalidArgument, "unknown circle kind");
      std::optional<Point> pivot;
      if (pivot_xy) pivot = Point{pivot_xy[0], pivot_xy[1]};
      j = circle_report(c.tri, c.tol.eps_rel, *k, pivot, ctx->prec_bits);
    }
    result = as_json ? j.dump() : render_text(j);
  });
  if (st) *st = s;
  return s == LEMOINE_OK ? dup_string(result) : nullptr;
}

char* lemoine_cmd_verify(lemoine_ctx* ctx, const char* which, int trials, int grid_n,
                         uint64_t seed, unsigned prec_bits, int as_json, int* all_pass,
                         lemoine_status* st) {
  std::string result;
  lemoine_status s = guarded(ctx, [&](TriangleContext& c) {
    VerifyOutcome outcome =
        run_verify(c, which ? which : "all", trials, grid_n, seed, prec_bits);
    if (all_pass) *all_pass = outcome.all_pass ? 1 : 0;
    result = as_json ? outcome.json.dump() : render_text(outcome.json);
  });
  if (st) *st = s;
  return s == LEMOINE_OK ? dup_string(result) : nullptr;
}

char* lemoine_cmd_hunt(lemoine_ctx* ctx, int as_json, lemoine_status* st) {
  std::string result;
  lemoine_status s = guarded(ctx, [&](TriangleContext& c) {
    if (c.equilateral_like())
      fail(ErrorCode::EquilateralDegenerate, "probe undefined for equilateral triangles");
    Json j = hunt_report(c);
    result = as_json ? j.dump() : render_text(j);
  });
  if (st) *st = s;
  return s == LEMOINE_OK ? dup_string(result) : nullptr;
}

char* lemoine_cmd_figure(lemoine_ctx* ctx, int fig_id, lemoine_status* st) {
  std::string result;
  lemoine_status s =
      guarded(ctx, [&](TriangleContext& c) { result = svg_figure(c, fig_id); });
  if (st) *st = s;
  return s == LEMOINE_OK ? dup_string(result) : nullptr;
}

void lemoine_free(char* str) { std::free(str); }

const char* lemoine_status_name(lemoine_status st) {
  switch (st) {
    case LEMOINE_OK: return "OK";
    case LEMOINE_E_DEGENERATE_INPUT: return "DegenerateInput";
    case LEMOINE_E_PARALLEL_LINES: return "ParallelLines";
    case LEMOINE_E_COLLINEAR_POINTS: return "CollinearPoints";
    case LEMOINE_E_NOT_CONCYCLIC: return "NotConcyclic";
    case LEMOINE_E_COINCIDENT_POINTS: return "CoincidentPoints";
    case LEMOINE_E_POINT_NOT_ON_CIRCLE: return "PointNotOnCircle";
    case LEMOINE_E_DEGENERATE_TANGENCY: return "DegenerateTangency";
    case LEMOINE_E_ANTIPODAL_CHORD: return "AntipodalChord";
    case LEMOINE_E_DEGENERATE_BASE: return "DegenerateBase";
    case LEMOINE_E_NOT_COLLINEAR: return "NotCollinear";
    case LEMOINE_E_POINT_OUTSIDE_CIRCLE: return "PointOutsideCircle";
    case LEMOINE_E_POINT_AT_VERTEX: return "PointAtVertex";
    case LEMOINE_E_POLE_AT_INFINITY: return "PoleAtInfinity";
    case LEMOINE_E_EQUILATERAL_DEGENERATE: return "EquilateralDegenerate";
    case LEMOINE_E_DEGENERATE_PIVOT: return "DegeneratePivot";
    case LEMOINE_E_TANGENTIAL_DEGENERACY: return "TangentialDegeneracy";
    case LEMOINE_E_NO_REAL_INTERSECTION: return "NoRealIntersection";
    case LEMOINE_E_DEGENERATE_STEP: return "DegenerateStep";
    case LEMOINE_E_TARGET_OUT_OF_RANGE: return "TargetOutOfRange";
    case LEMOINE_E_NON_FINITE: return "NonFinite";
    case LEMOINE_E_INVALID_ARGUMENT: return "InvalidArgument";
    case LEMOINE_E_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

int lemoine_abi_version(void) { return 1; }

}  // extern "C"

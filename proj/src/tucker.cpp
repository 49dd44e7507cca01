#include "lemoine/tucker.hpp"

#include <cmath>
#include <optional>

namespace lemoine {

namespace {

std::optional<double> t_of_seed(const TriangleContext& ctx, double s) {
  try {
    TuckerSample sample = tucker_circle(ctx, s);
    if (!sample.t) return std::nullopt;
    // A wildly non-concyclic fit means the chain degenerated numerically.
    if (sample.concyclicity > 1e-6) return std::nullopt;
    return *sample.t;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<TuckerMatch> tucker_radius_at(const TriangleContext& ctx, double t_target,
                                          const TuckerScanOptions& opts) {
  if (ctx.equilateral_like())
    fail(ErrorCode::EquilateralDegenerate, "Tucker center ratio undefined for equilateral triangles");
  if (opts.samples < 2) fail(ErrorCode::InvalidArgument, "scan needs at least 2 samples");

  std::vector<TuckerMatch> found;
  auto record = [&](double s) {
    TuckerSample sample = tucker_circle(ctx, s);
    for (const TuckerMatch& m : found)
      if (std::fabs(m.s - s) < 1e-9) return;
    found.push_back({s, *sample.t, sample.radius});
  };

  double step = (opts.s_hi - opts.s_lo) / (opts.samples - 1);
  std::optional<double> prev_g;
  double prev_s = 0.0;
  for (int i = 0; i < opts.samples; ++i) {
    double s = opts.s_lo + step * i;
    std::optional<double> t = t_of_seed(ctx, s);
    if (!t) {
      prev_g.reset();
      continue;
    }
    double g = *t - t_target;
    if (std::fabs(g) <= opts.t_tol) {
      record(s);
      prev_g.reset();
      continue;
    }
    if (prev_g && ((*prev_g < 0.0) != (g < 0.0))) {
      // Bisect [prev_s, s] on the sign of t(s) - t_target.
      double lo = prev_s, hi = s, glo = *prev_g;
      bool ok = true;
      for (int it = 0; it < opts.max_bisect; ++it) {
        double mid = 0.5 * (lo + hi);
        std::optional<double> tm = t_of_seed(ctx, mid);
        if (!tm) {
          ok = false;
          break;
        }
        double gm = *tm - t_target;
        if (std::fabs(gm) <= opts.t_tol || hi - lo < 1e-15) {
          if (std::fabs(gm) <= 1e3 * opts.t_tol) record(mid);
          ok = false;  // bracket consumed either way
          break;
        }
        if ((glo < 0.0) != (gm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          glo = gm;
        }
      }
      (void)ok;
    }
    prev_g = g;
    prev_s = s;
  }
  if (found.empty())
    fail(ErrorCode::TargetOutOfRange, "no Tucker circle at the requested center ratio");
  return found;
}

TuckerVerdict is_tucker(const TriangleContext& ctx, const Circle& c,
                        const TuckerScanOptions& opts) {
  if (ctx.equilateral_like())
    fail(ErrorCode::EquilateralDegenerate, "Tucker membership undefined for equilateral triangles");
  Line axis = brocard_axis_line(ctx.cd.o, ctx.symmedian, ctx.tol);
  TuckerVerdict v;
  double off_axis = std::fabs(axis.eval(c.center));
  if (off_axis > ctx.tol.length()) {
    v.is_tucker = false;
    v.reason = TuckerVerdictReason::OffAxis;
    v.margin = off_axis / ctx.circumradius;
    return v;
  }
  v.t = projection_ratio(ctx.symmedian, ctx.cd.o, c.center, ctx.tol);
  try {
    v.matches = tucker_radius_at(ctx, v.t, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TargetOutOfRange) throw;
    v.is_tucker = false;
    v.reason = TuckerVerdictReason::NoTuckerCircleAtT;
    v.margin = 1.0;  // sentinel: nothing in the family to compare against
    return v;
  }
  double radius = c.radius();
  double gap = std::fabs(radius - v.matches[0].radius);
  for (const TuckerMatch& m : v.matches) gap = std::min(gap, std::fabs(radius - m.radius));
  v.margin = gap / ctx.circumradius;
  if (v.margin <= 100.0 * ctx.tol.eps_rel) {
    v.is_tucker = true;
    v.reason = TuckerVerdictReason::RadiusMatch;
  } else {
    v.is_tucker = false;
    v.reason = TuckerVerdictReason::RadiusGap;
  }
  return v;
}

}  // namespace lemoine

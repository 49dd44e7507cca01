#include <cmath>
#include <cstdio>

#include "lemoine/bigfloat.hpp"
#include "lemoine/verify.hpp"

namespace lemoine {

namespace {

constexpr mpfr_prec_t kEvalPrec = 256;  // guard precision for error evaluation

inline BigFloat widen(double x) { return BigFloat(x); }
inline BigFloat widen(const BigFloat& x) { return x; }

struct PipelineValues {
  BigFloat ox, oy, r2, lx, ly, apx, apy, m5x, m5y;  // exact copies of backend results
  double concyclicity = 0.0;
  double ratio_dev = 0.0;  // |t - 3/4|
};

template <class S>
PipelineValues compute_pipeline(const Triangle& t, double eps_rel) {
  Tri<S> tri{{S(t.a.x), S(t.a.y)}, {S(t.b.x), S(t.b.y)}, {S(t.c.x), S(t.c.y)}};
  TriangleCtx<S> ctx = TriangleCtx<S>::make(tri, S(eps_rel));
  SixPointCfg<S> cfg = new_circle(ctx, ctx.symmedian);
  const CevianTriple<S>& cev = *cfg.trace.cevian;
  PipelineValues out;
  out.ox = widen(ctx.cd.o.x);
  out.oy = widen(ctx.cd.o.y);
  out.r2 = widen(ctx.cd.r2);
  out.lx = widen(ctx.symmedian.x);
  out.ly = widen(ctx.symmedian.y);
  out.apx = widen(cev.a_p.x);
  out.apy = widen(cev.a_p.y);
  out.m5x = widen(cfg.fitted.center.x);
  out.m5y = widen(cfg.fitted.center.y);
  out.concyclicity = num::to_double(cfg.residual);
  S t_ratio = projection_ratio(ctx.symmedian, ctx.cd.o, cfg.fitted.center, ctx.tol);
  out.ratio_dev = num::to_double(num::abs(t_ratio - S(0.75)));
  return out;
}

double rational_error(const BigFloat& computed, long nx, long dx) {
  PrecisionGuard guard(kEvalPrec);
  return abs(computed - BigFloat::ratio(nx, dx)).to_double();
}

double point_error(const BigFloat& x, const BigFloat& y, long nx, long dx, long ny, long dy) {
  return std::max(rational_error(x, nx, dx), rational_error(y, ny, dy));
}

double shrink_ratio(double hi, double lo) {
  if (lo <= 0.0) return hi <= 1e-30 ? 0.0 : 1.0;
  return hi / lo;
}

bool is_reference(const Triangle& t) {
  Triangle r = reference_triangle();
  return t.a.x == r.a.x && t.a.y == r.a.y && t.b.x == r.b.x && t.b.y == r.b.y &&
         t.c.x == r.c.x && t.c.y == r.c.y;
}

}  // namespace

VerificationReport verify_precision(const TriangleContext& ctx, unsigned prec_bits) {
  if (prec_bits < 64) fail(ErrorCode::InvalidArgument, "bigfloat precision must be >= 64 bits");
  VerificationReport rep;
  rep.claim_id = "precision-monotone";
  char digest[320];
  std::snprintf(digest, sizeof(digest), "%s;prec=%u", triangle_digest(ctx.tri).c_str(), prec_bits);
  rep.inputs_digest = digest;

  PipelineValues lo = compute_pipeline<double>(ctx.tri, ctx.tol.eps_rel);
  PipelineValues hi;
  {
    PrecisionGuard guard(static_cast<mpfr_prec_t>(prec_bits));
    hi = compute_pipeline<BigFloat>(ctx.tri, ctx.tol.eps_rel);
  }

  rep.add("shrink_concyclicity", shrink_ratio(hi.concyclicity, lo.concyclicity),
          thresholds::kPrecisionShrink);
  rep.add("shrink_center_ratio", shrink_ratio(hi.ratio_dev, lo.ratio_dev),
          thresholds::kPrecisionShrink);
  rep.outputs["binary64_concyclicity"] = lo.concyclicity;
  rep.outputs["bigfloat_concyclicity"] = hi.concyclicity;
  rep.outputs["binary64_center_ratio_dev"] = lo.ratio_dev;
  rep.outputs["bigfloat_center_ratio_dev"] = hi.ratio_dev;

  if (is_reference(ctx.tri)) {
    struct Anchor {
      const char* name;
      double err_lo;
      double err_hi;
    };
    const Anchor anchors[] = {
        {"circumcenter", point_error(lo.ox, lo.oy, 2, 1, 1, 1),
         point_error(hi.ox, hi.oy, 2, 1, 1, 1)},
        {"circumradius2", rational_error(lo.r2, 5, 1), rational_error(hi.r2, 5, 1)},
        {"symmedian", point_error(lo.lx, lo.ly, 14, 11, 12, 11),
         point_error(hi.lx, hi.ly, 14, 11, 12, 11)},
        {"cevian_a", point_error(lo.apx, lo.apy, 56, 17, 48, 17),
         point_error(hi.apx, hi.apy, 56, 17, 48, 17)},
        {"new_center", point_error(lo.m5x, lo.m5y, 20, 11, 45, 44),
         point_error(hi.m5x, hi.m5y, 20, 11, 45, 44)},
    };
    for (const Anchor& a : anchors) {
      rep.add(std::string("shrink_") + a.name, shrink_ratio(a.err_hi, a.err_lo),
              thresholds::kPrecisionShrink);
      rep.outputs[std::string("binary64_") + a.name] = a.err_lo;
      rep.outputs[std::string("bigfloat_") + a.name] = a.err_hi;
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace lemoine

#include "lemoine/sampling.hpp"

#include <cmath>

namespace lemoine {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Triangle random_triangle(Rng& rng, const RandomTriangleOptions& opts) {
  double amin = opts.min_angle_deg * kPi / 180.0;
  if (!(amin > 0.0) || 3.0 * amin >= kPi)
    fail(ErrorCode::InvalidArgument, "min angle must be in (0, 60) degrees");
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    double alpha = rng.uniform(amin, kPi - 2.0 * amin);
    double beta = rng.uniform(amin, kPi - alpha - amin);
    double gamma = kPi - alpha - beta;
    double phi = rng.uniform(0.0, 2.0 * kPi);
    // Inscribed in the unit circle: arc BC = 2*alpha, arc CA = 2*beta, arc AB = 2*gamma.
    double ta = phi;
    double tb = phi + 2.0 * gamma;
    double tc = phi + 2.0 * gamma + 2.0 * alpha;
    Triangle t{{std::cos(ta), std::sin(ta)}, {std::cos(tb), std::sin(tb)},
               {std::cos(tc), std::sin(tc)}};
    if (opts.min_ol_over_r > 0.0) {
      Tolerance tol{kDefaultEpsRel, 1.0};
      Point l = symmedian_point(t, tol);
      if (norm(l) < opts.min_ol_over_r) continue;  // O is the origin by construction
    }
    return t;
  }
  fail(ErrorCode::InvalidArgument, "triangle sampler exhausted its attempts");
}

std::vector<Point> barycentric_grid(const Triangle& t, int grid_n, double margin) {
  if (grid_n < 3) fail(ErrorCode::InvalidArgument, "grid_n must be at least 3");
  if (!(margin >= 0.0) || 3.0 * margin >= 1.0)
    fail(ErrorCode::InvalidArgument, "margin must be in [0, 1/3)");
  std::vector<Point> pivots;
  double span = 1.0 - 3.0 * margin;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      double u = margin + span * (static_cast<double>(i) / (grid_n - 1));
      double v = margin + span * (static_cast<double>(j) / (grid_n - 1));
      double w = 1.0 - u - v;
      if (w < margin - 1e-12) continue;
      pivots.push_back({u * t.a.x + v * t.b.x + w * t.c.x, u * t.a.y + v * t.b.y + w * t.c.y});
    }
  }
  return pivots;
}

}  // namespace lemoine

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lemoine/circles.hpp"
#include "lemoine/sampling.hpp"
#include "lemoine/tucker.hpp"

namespace lemoine {

// Pinned pass thresholds. Residuals are dimensionless (normalized by the
// circumradius or an appropriate power of it).
namespace thresholds {
inline constexpr double kConcyclicity = 1e-8;
inline constexpr double kRatio = 1e-8;
inline constexpr double kScaffold = 1e-8;
inline constexpr double kSpectrum = 1e-8;
inline constexpr double kLemma = 1e-8;
inline constexpr double kTuckerClosure = 1e-9;
inline constexpr double kTuckerAxis = 1e-8;
inline constexpr double kTuckerRadius = 1e-8;
inline constexpr double kNonTuckerMarginFloor = 1e-7;   // 100 * eps_rel
inline constexpr double kNonTuckerRegression = 1e-3;    // observed margins stay above this
inline constexpr double kConverseFarFloor = 1e-4;
inline constexpr double kConverseExclusion = 0.1;       // * R, around L
inline constexpr double kResidualAtPivot = 1e-8;        // 10 * eps_rel
inline constexpr double kConverseRefineDist = 1e-6;     // * R
inline constexpr double kArgminDist = 1e-4;             // * R, refined argmin vs L
inline constexpr double kPrecisionShrink = 1e-6;        // high/low residual ratio bound
}  // namespace thresholds

struct NamedResidual {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;

  bool ok() const { return value <= threshold; }
};

struct VerificationReport {
  std::string claim_id;
  std::vector<NamedResidual> residuals;      // sorted by name
  std::map<std::string, double> outputs;     // extra observables
  std::string inputs_digest;
  bool pass = true;

  void add(const std::string& name, double value, double threshold);
  void finalize();  // sort residuals, recompute pass
};

struct SweepSample {
  Point pivot;
  double residual = 0.0;
  bool failed = false;
};

struct SweepResult {
  CircleKind kind = CircleKind::New;
  int grid_n = 0;
  std::vector<SweepSample> samples;
  Point argmin;                     // best grid node
  double argmin_residual = 0.0;
  double residual_at_l = 0.0;
  int failure_count = 0;
  Point refined;                    // derivative-free descent from the argmin
  double refined_residual = 0.0;
  double refined_dist_to_l = 0.0;   // / R
  double far_min_residual = 0.0;    // min residual over nodes with |P-L| > exclusion
  int far_floor_violations = 0;     // far nodes with residual <= far floor
};

std::string triangle_digest(const Triangle& t);

VerificationReport verify_theorem_new(const TriangleContext& ctx);
VerificationReport verify_lemma_circumcevian(const TriangleContext& ctx);
VerificationReport verify_proof_scaffold(const TriangleContext& ctx,
                                         std::optional<Point> pivot = std::nullopt);
VerificationReport verify_spectrum(const TriangleContext& ctx);
VerificationReport verify_tucker_suite(const TriangleContext& ctx, int seeds, uint64_t seed);

SweepResult converse_sweep(const TriangleContext& ctx, int grid_n);
SweepResult uniqueness_sweep(const TriangleContext& ctx, CircleKind kind, int grid_n);
VerificationReport sweep_to_report(const SweepResult& sweep, const TriangleContext& ctx);

// Residual comparison between the binary64 backend and the configurable
// precision backend. Anchor comparisons against exact rationals are included
// when the triangle is the reference one.
VerificationReport verify_precision(const TriangleContext& ctx, unsigned prec_bits = 128);

struct RunAllOptions {
  int trials = 100;
  uint64_t seed = 7;
  int grid_n = 33;
  int tucker_seeds = 100;
};

struct RunAllResult {
  std::vector<VerificationReport> reports;  // sorted by claim_id
  bool pass = true;
};

RunAllResult run_all(const TriangleContext& ctx, const RunAllOptions& opts);

}  // namespace lemoine

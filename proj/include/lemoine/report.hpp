#pragma once

#include <optional>
#include <string>

#include "lemoine/json_writer.hpp"
#include "lemoine/verify.hpp"

namespace lemoine {

// Backend-independent snapshot of the centers command output. prec_bits = 0
// computes in binary64, otherwise in the configurable-precision backend
// (values are rounded to binary64 for serialization either way).
struct CentersView {
  Point o, l, g;
  double r2 = 1.0;
  double circumradius = 1.0;
  bool axis_defined = false;
  Line axis{};
  std::array<Point, 5> centers{};                  // M1..M5
  std::array<std::optional<double>, 5> ratios{};   // along L -> O
  Point open_slot{};
};

CentersView centers_view(const Triangle& tri, double eps_rel, unsigned prec_bits = 0);

SixPointConfig circle_config_computed(const Triangle& tri, double eps_rel, CircleKind kind,
                                      std::optional<Point> pivot, unsigned prec_bits = 0);

Json centers_report(const Triangle& tri, double eps_rel, unsigned prec_bits = 0);
Json circle_report(const Triangle& tri, double eps_rel, CircleKind kind,
                   std::optional<Point> pivot, unsigned prec_bits = 0);
Json tucker_report(const TriangleContext& ctx, double s);
Json hunt_report(const TriangleContext& ctx);
Json report_to_json(const VerificationReport& rep);
Json sweep_report_json(const SweepResult& sweep, const TriangleContext& ctx);

struct VerifyOutcome {
  Json json;
  bool all_pass = true;
};

// which: all | thm-new | lemma | scaffold | converse | uniqueness | tucker |
// spectrum | precision
VerifyOutcome run_verify(const TriangleContext& ctx, const std::string& which, int trials,
                         int grid_n, uint64_t seed, unsigned prec_bits);

// Human-readable rendering of a report produced above.
std::string render_text(const Json& j);

// Dedicated text view for the centers command.
std::string centers_text(const CentersView& view);

}  // namespace lemoine

#pragma once

#include <string>

#include "lemoine/circles.hpp"

namespace lemoine {

// Deterministic SVG renderings:
//   1..4  First / Second / Third / Bui construction
//   5     new construction with the three tangent circles
//   6     new six-point circle only
//   7     the configuration at a non-symmedian pivot (the centroid)
//   8     Brocard axis with the five centers and the open slot
std::string svg_figure(const TriangleContext& ctx, int fig_id);

}  // namespace lemoine

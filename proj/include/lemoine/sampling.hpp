#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lemoine/triangle.hpp"

namespace lemoine {

// mt19937_64 with an explicit 53-bit mapping so streams are identical across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 eng_;
};

struct RandomTriangleOptions {
  double min_angle_deg = 10.0;
  double min_ol_over_r = 0.0;  // reject samples with |O - L| below this (near-equilateral)
  int max_attempts = 10000;
};

// Random triangle inscribed in the unit circle centered at the origin, all
// angles at least min_angle_deg, random orientation.
Triangle random_triangle(Rng& rng, const RandomTriangleOptions& opts = {});

// Interior pivots on a grid_n x grid_n barycentric lattice, clipped to the
// simplex with the given margin from the boundary.
std::vector<Point> barycentric_grid(const Triangle& t, int grid_n, double margin = 0.02);

inline Triangle reference_triangle() { return {{0.0, 0.0}, {4.0, 0.0}, {1.0, 3.0}}; }

}  // namespace lemoine

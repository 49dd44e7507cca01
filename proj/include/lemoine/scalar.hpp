#pragma once

#include <cmath>

#include "lemoine/bigfloat.hpp"
#include "lemoine/error.hpp"

namespace lemoine {

// Scalar helpers usable with both the binary64 backend and BigFloat.
namespace num {

inline double sqrt(double x) {
  if (x < 0.0) fail(ErrorCode::NonFinite, "sqrt of negative value");
  return std::sqrt(x);
}
inline BigFloat sqrt(const BigFloat& x) { return lemoine::sqrt(x); }

inline double abs(double x) { return std::fabs(x); }
inline BigFloat abs(const BigFloat& x) { return lemoine::abs(x); }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const BigFloat&) { return true; }  // enforced at op boundaries

inline double to_double(double x) { return x; }
inline double to_double(const BigFloat& x) { return x.to_double(); }

template <class S>
S from_double(double d) {
  return S(d);
}

template <class S>
void check_finite(const S& x, const char* what) {
  if (!is_finite(x)) fail(ErrorCode::NonFinite, what);
}

}  // namespace num

constexpr double kDefaultEpsRel = 1e-9;

// Relative tolerance context. length_scale is the circumradius of the triangle
// under test, so thresholds stay meaningful under similarity transforms.
template <class S>
struct Tol {
  S eps_rel{kDefaultEpsRel};
  S length_scale{1.0};

  S length() const { return eps_rel * length_scale; }
  S area() const { return eps_rel * length_scale * length_scale; }
};

using Tolerance = Tol<double>;

}  // namespace lemoine

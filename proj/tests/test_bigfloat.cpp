#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "lemoine/bigfloat.hpp"

using namespace lemoine;

TEST_CASE("construction and rounding to double") {
  CHECK(BigFloat(0.1).to_double() == 0.1);
  CHECK(BigFloat(-3.5).to_double() == -3.5);
  CHECK(BigFloat(0.0).is_zero());
  CHECK(BigFloat(7).to_double() == 7.0);
  CHECK(BigFloat(-2).sign() == -1);
}

TEST_CASE("exact rational arithmetic at context precision") {
  PrecisionGuard guard(128);
  BigFloat third = BigFloat::ratio(1, 3);
  BigFloat one = third * BigFloat(3);
  double err = abs(one - BigFloat(1)).to_double();
  CHECK(err < 1e-37);
  CHECK(err >= 0.0);

  BigFloat l = BigFloat::ratio(14, 11);
  CHECK(l.to_double() == doctest::Approx(14.0 / 11.0).epsilon(1e-15));
}

TEST_CASE("sqrt is faithful at the context precision") {
  PrecisionGuard guard(128);
  BigFloat two(2.0);
  BigFloat root = sqrt(two);
  double err = abs(root * root - two).to_double();
  CHECK(err < 1e-37);
  CHECK(root.to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("residuals shrink as precision grows") {
  auto sqrt_defect = [](mpfr_prec_t prec) {
    PrecisionGuard guard(prec);
    BigFloat x(7.0);
    return abs(sqrt(x) * sqrt(x) - x).to_double();
  };
  double at64 = sqrt_defect(64);
  double at256 = sqrt_defect(256);
  CHECK(at64 > 0.0);
  CHECK(at256 < at64 * 1e-40);
}

TEST_CASE("comparisons and ordering") {
  BigFloat a(1.5), b(2.5);
  CHECK(a < b);
  CHECK(b > a);
  CHECK(a <= a);
  CHECK(a == BigFloat(1.5));
  CHECK(a != b);
  CHECK((-a).sign() == -1);
  CHECK(abs(-a) == a);
}

TEST_CASE("domain errors throw rather than producing non-finite values") {
  CHECK_THROWS_AS(BigFloat(1.0) / BigFloat(0.0), Error);
  CHECK_THROWS_AS(sqrt(BigFloat(-1.0)), Error);
  CHECK_THROWS_AS(BigFloat::ratio(1, 0), Error);
  CHECK_THROWS_AS(BigFloat(std::numeric_limits<double>::infinity()), Error);
  CHECK_THROWS_AS(PrecisionGuard(32), Error);
}

TEST_CASE("precision guard restores the previous context") {
  mpfr_prec_t before = BigFloat::context_precision();
  {
    PrecisionGuard guard(192);
    CHECK(BigFloat::context_precision() == 192);
    {
      PrecisionGuard inner(64);
      CHECK(BigFloat::context_precision() == 64);
    }
    CHECK(BigFloat::context_precision() == 192);
  }
  CHECK(BigFloat::context_precision() == before);
}

TEST_CASE("mixed-magnitude addition keeps the small term") {
  PrecisionGuard guard(256);
  BigFloat big(1.0);
  BigFloat tiny = BigFloat::ratio(1, 1000000) * BigFloat::ratio(1, 1000000);  // 1e-12
  BigFloat sum = big + tiny;
  double recovered = (sum - big).to_double();
  CHECK(recovered == doctest::Approx(1e-12).epsilon(1e-12));
}

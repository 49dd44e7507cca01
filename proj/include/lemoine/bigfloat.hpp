#pragma once

#include <mpfr.h>

#include <string>

#include "lemoine/error.hpp"

namespace lemoine {

// Arbitrary-precision binary float. Results of arithmetic are rounded to the
// thread-local context precision (round to nearest); set it with PrecisionGuard.
// Every value is finite; operations whose result would be NaN or infinite throw.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, kMinPrec); mpfr_set_zero(v_, 1); }
  BigFloat(double d) {  // NOLINT: implicit by design, conversion is exact
    mpfr_init2(v_, 53);
    mpfr_set_d(v_, d, MPFR_RNDN);
    check_finite("from double");
  }
  BigFloat(int i) : BigFloat(static_cast<long>(i)) {}  // NOLINT
  BigFloat(long i) { mpfr_init2(v_, kMinPrec); mpfr_set_si(v_, i, MPFR_RNDN); }  // NOLINT

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static mpfr_prec_t context_precision();
  static void set_context_precision(mpfr_prec_t bits);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Exact ratio of two integers, rounded once at the context precision.
  static BigFloat ratio(long num, long den);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    return binop(a, b, mpfr_add, "+");
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    return binop(a, b, mpfr_sub, "-");
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    return binop(a, b, mpfr_mul, "*");
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (mpfr_zero_p(b.v_)) fail(ErrorCode::NonFinite, "division by zero");
    return binop(a, b, mpfr_div, "/");
  }
  BigFloat operator-() const {
    BigFloat r = *this;
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend BigFloat sqrt(const BigFloat& a) {
    if (mpfr_sgn(a.v_) < 0) fail(ErrorCode::NonFinite, "sqrt of negative value");
    BigFloat r;
    mpfr_set_prec(r.v_, context_precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat abs(const BigFloat& a) {
    BigFloat r = a;
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

 private:
  static constexpr mpfr_prec_t kMinPrec = 64;

  using MpfrBinop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

  static BigFloat binop(const BigFloat& a, const BigFloat& b, MpfrBinop op, const char* name) {
    BigFloat r;
    mpfr_set_prec(r.v_, context_precision());
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.check_finite(name);
    return r;
  }

  void check_finite(const char* op) const {
    if (!mpfr_number_p(v_)) fail(ErrorCode::NonFinite, std::string("bigfloat op '") + op + "'");
  }

  mpfr_t v_;
};

// The friend definitions above are only visible through ADL; expose them to
// qualified lookup as well.
BigFloat sqrt(const BigFloat& a);
BigFloat abs(const BigFloat& a);

// RAII scope for the context precision used by BigFloat arithmetic.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(mpfr_prec_t bits) : prev_(BigFloat::context_precision()) {
    BigFloat::set_context_precision(bits);
  }
  ~PrecisionGuard() { BigFloat::set_context_precision(prev_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t prev_;
};

}  // namespace lemoine

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dmiop/rational.hpp"

namespace dmiop {

inline constexpr long kDefaultPrecision = 256;
inline constexpr long kMinPrecision = 128;

/// Binary floating value with an explicit precision, owning an mpfr_t.
/// Mixed-precision operations produce the larger of the two precisions.
class BigReal {
 public:
  explicit BigReal(long precision = kDefaultPrecision) {
    mpfr_init2(v_, clamp(precision));
    mpfr_set_zero(v_, 1);
  }
  BigReal(const Rational& r, long precision) {
    mpfr_init2(v_, clamp(precision));
    mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
  }
  BigReal(long value, long precision) {
    mpfr_init2(v_, clamp(precision));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept : BigReal(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific decimal with enough digits to round-trip the precision.
  std::string to_string() const {
    const int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  friend BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add); }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub); }
  friend BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul); }
  friend BigReal operator/(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_div); }
  BigReal& operator+=(const BigReal& b) { return *this = *this + b; }
  BigReal& operator-=(const BigReal& b) { return *this = *this - b; }
  BigReal& operator*=(const BigReal& b) { return *this = *this * b; }
  BigReal& operator/=(const BigReal& b) { return *this = *this / b; }
  BigReal operator-() const {
    BigReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend BigReal abs(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  /// 2^e at the given precision.
  static BigReal exp2(long e, long precision) {
    BigReal r(precision);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

 private:
  static mpfr_prec_t clamp(long p) { return static_cast<mpfr_prec_t>(std::max<long>(p, MPFR_PREC_MIN)); }

  template <class Op>
  static BigReal binary(const BigReal& a, const BigReal& b, Op op) {
    BigReal r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

inline BigReal big_sqrt(const BigReal& x) {
  if (x.sign() < 0) fail(ErrorCode::NegativeRadicand, "square root of " + x.to_string());
  BigReal r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

inline BigReal to_real(const Rational& r, long precision) { return BigReal(r, precision); }

}  // namespace dmiop

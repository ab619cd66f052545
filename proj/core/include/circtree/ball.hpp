#pragma once

// Midpoint-radius (ball) arithmetic over MPFR.
//
// A Ball is the closed interval [mid - rad, mid + rad]. Every operation
// returns a ball that contains the exact result of the operation applied to
// every point of its inputs: midpoints are rounded to nearest at the working
// precision and the rounding error is folded into an upward-rounded radius.
//
// Operations that cannot be decided at the current precision (dividing by a
// ball that straddles zero, arcsine of a ball touching +-1, ...) throw
// InsufficientPrecision so that callers can retry with more bits.

#include <mpfr.h>
#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace circtree {

class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Owning RAII handle for an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal rendering with `digits` significant digits (correctly rounded).
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

class Ball {
 public:
  /// Precision of radius arithmetic; radii only need a few correct bits.
  static constexpr mpfr_prec_t kRadiusBits = 64;

  /// The exact zero at precision `prec`.
  explicit Ball(mpfr_prec_t prec);

  static Ball from_integer(const mpz_class& value, mpfr_prec_t prec);
  static Ball from_integer(long value, mpfr_prec_t prec);
  static Ball from_rational(const mpq_class& value, mpfr_prec_t prec);
  static Ball pi(mpfr_prec_t prec);
  /// Enclosure of pi * num / den.
  static Ball pi_times(long num, long den, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mid_.precision(); }
  const BigFloat& mid() const { return mid_; }
  const BigFloat& rad() const { return rad_; }

  BigFloat lower() const;
  BigFloat upper() const;

  bool contains_zero() const;
  bool is_positive() const;  // every point > 0
  bool is_negative() const;  // every point < 0
  bool contains(const mpz_class& value) const;
  bool contains(const mpq_class& value) const;
  bool overlaps(const Ball& other) const;
  /// True when `other` lies entirely inside this ball.
  bool encloses(const Ball& other) const;

  /// Radius strictly below `bound`.
  bool radius_below(double bound) const;
  /// 2*rad / |mid|, or +inf when mid is zero.
  double relative_width() const;

  /// The only integer in the ball, if there is exactly one.
  std::optional<mpz_class> unique_integer() const;

  std::string to_string(int digits = 20) const;

  Ball operator-() const;
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  Ball& operator+=(const Ball& b) { return *this = *this + b; }
  Ball& operator-=(const Ball& b) { return *this = *this - b; }
  Ball& operator*=(const Ball& b) { return *this = *this * b; }
  Ball& operator/=(const Ball& b) { return *this = *this / b; }

  friend Ball sqrt(const Ball& x);
  friend Ball sin(const Ball& x);
  friend Ball cos(const Ball& x);
  friend Ball atan(const Ball& x);
  friend Ball asin(const Ball& x);
  friend Ball exp(const Ball& x);
  friend Ball cosh(const Ball& x);
  friend Ball acosh(const Ball& x);
  friend Ball abs(const Ball& x);

 private:
  // Adds ulp(mid) to the radius when `ternary` reports an inexact midpoint.
  void absorb_rounding(int ternary);
  // rad += lipschitz * input_rad, rounded up.
  void absorb_propagated(const BigFloat& lipschitz, const BigFloat& input_rad);

  BigFloat mid_;
  BigFloat rad_;
};

Ball pow(const Ball& base, unsigned long exponent);
Ball sqr(const Ball& x);

struct ComplexBall {
  Ball re;
  Ball im;

  explicit ComplexBall(mpfr_prec_t prec) : re(prec), im(prec) {}
  ComplexBall(Ball real, Ball imag) : re(std::move(real)), im(std::move(imag)) {}

  mpfr_prec_t precision() const { return re.precision(); }

  ComplexBall conj() const { return {re, -im}; }
  bool overlaps(const ComplexBall& other) const {
    return re.overlaps(other.re) && im.overlaps(other.im);
  }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexBall operator*(const ComplexBall& a, const Ball& s) {
    return {a.re * s, a.im * s};
  }
  friend ComplexBall operator/(const ComplexBall& a, const Ball& s) {
    return {a.re / s, a.im / s};
  }
  ComplexBall& operator+=(const ComplexBall& b) { return *this = *this + b; }
  ComplexBall& operator-=(const ComplexBall& b) { return *this = *this - b; }
  ComplexBall& operator*=(const ComplexBall& b) { return *this = *this * b; }
};

/// e^{i*angle}
ComplexBall expi(const Ball& angle);
ComplexBall pow(const ComplexBall& base, unsigned long exponent);
Ball abs(const ComplexBall& z);

}  // namespace circtree

#include "circtree/ball.hpp"

#include <algorithm>
#include <limits>

namespace circtree {

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

// ---------------------------------------------------------------------------
// Ball

namespace {

using Mag = BigFloat;

Mag mag() { return Mag(Ball::kRadiusBits); }

// |x| * |y| rounded up.
void mul_abs_up(Mag& out, mpfr_srcptr x, mpfr_srcptr y) {
  mpfr_mul(out.get(), x, y, MPFR_RNDA);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
}

// |x| rounded down to radius precision.
Mag abs_down(mpfr_srcptr x) {
  Mag out = mag();
  mpfr_abs(out.get(), x, MPFR_RNDZ);
  return out;
}

// |x| rounded up to radius precision.
Mag abs_up(mpfr_srcptr x) {
  Mag out = mag();
  mpfr_abs(out.get(), x, MPFR_RNDA);
  return out;
}

mpfr_prec_t joint_precision(const Ball& a, const Ball& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadiusBits) {}

void Ball::absorb_rounding(int ternary) {
  if (ternary == 0) {
    return;
  }
  if (mpfr_zero_p(mid_.get()) || !mpfr_number_p(mid_.get())) {
    throw InsufficientPrecision("midpoint underflow or overflow");
  }
  Mag ulp = mag();
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - precision(), MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

void Ball::absorb_propagated(const BigFloat& lipschitz, const BigFloat& input_rad) {
  Mag t = mag();
  mpfr_mul(t.get(), lipschitz.get(), input_rad.get(), MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), t.get(), MPFR_RNDU);
}

Ball Ball::from_integer(const mpz_class& value, mpfr_prec_t prec) {
  Ball b(prec);
  b.absorb_rounding(mpfr_set_z(b.mid_.get(), value.get_mpz_t(), MPFR_RNDN));
  return b;
}

Ball Ball::from_integer(long value, mpfr_prec_t prec) {
  Ball b(prec);
  b.absorb_rounding(mpfr_set_si(b.mid_.get(), value, MPFR_RNDN));
  return b;
}

Ball Ball::from_rational(const mpq_class& value, mpfr_prec_t prec) {
  Ball b(prec);
  b.absorb_rounding(mpfr_set_q(b.mid_.get(), value.get_mpq_t(), MPFR_RNDN));
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Ball b(prec);
  b.absorb_rounding(mpfr_const_pi(b.mid_.get(), MPFR_RNDN));
  return b;
}

Ball Ball::pi_times(long num, long den, mpfr_prec_t prec) {
  if (den <= 0) {
    throw std::invalid_argument("pi_times: denominator must be positive");
  }
  // Reduce into (-den, den] so the angle stays in (-pi, pi].
  long r = num % (2 * den);
  if (r > den) {
    r -= 2 * den;
  } else if (r <= -den) {
    r += 2 * den;
  }
  if (r == 0) {
    return Ball(prec);
  }
  return pi(prec) * from_integer(r, prec) / from_integer(den, prec);
}

BigFloat Ball::lower() const {
  BigFloat out(precision());
  mpfr_sub(out.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return out;
}

BigFloat Ball::upper() const {
  BigFloat out(precision());
  mpfr_add(out.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return out;
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0; }

bool Ball::is_positive() const {
  return mpfr_sgn(mid_.get()) > 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool Ball::is_negative() const {
  return mpfr_sgn(mid_.get()) < 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool Ball::contains(const mpz_class& value) const {
  return mpfr_cmp_z(lower().get(), value.get_mpz_t()) <= 0 &&
         mpfr_cmp_z(upper().get(), value.get_mpz_t()) >= 0;
}

bool Ball::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lower().get(), value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(upper().get(), value.get_mpq_t()) >= 0;
}

bool Ball::overlaps(const Ball& other) const {
  return mpfr_cmp(lower().get(), other.upper().get()) <= 0 &&
         mpfr_cmp(other.lower().get(), upper().get()) <= 0;
}

bool Ball::encloses(const Ball& other) const {
  return mpfr_cmp(lower().get(), other.lower().get()) <= 0 &&
         mpfr_cmp(other.upper().get(), upper().get()) <= 0;
}

bool Ball::radius_below(double bound) const { return mpfr_cmp_d(rad_.get(), bound) < 0; }

double Ball::relative_width() const {
  if (mpfr_zero_p(mid_.get())) {
    return mpfr_zero_p(rad_.get()) ? 0.0 : std::numeric_limits<double>::infinity();
  }
  Mag t = mag();
  mpfr_mul_2ui(t.get(), rad_.get(), 1, MPFR_RNDU);
  Mag m = abs_down(mid_.get());
  mpfr_div(t.get(), t.get(), m.get(), MPFR_RNDU);
  return mpfr_get_d(t.get(), MPFR_RNDU);
}

std::optional<mpz_class> Ball::unique_integer() const {
  mpz_class ceil_lo, floor_hi;
  mpfr_get_z(ceil_lo.get_mpz_t(), lower().get(), MPFR_RNDU);
  mpfr_get_z(floor_hi.get_mpz_t(), upper().get(), MPFR_RNDD);
  if (ceil_lo != floor_hi) {
    return std::nullopt;
  }
  return ceil_lo;
}

std::string Ball::to_string(int digits) const {
  return "[" + mid_.to_string(digits) + " +/- " + rad_.to_string(3) + "]";
}

Ball Ball::operator-() const {
  Ball r(*this);
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(joint_precision(a, b));
  int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  r.absorb_rounding(t);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(joint_precision(a, b));
  int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  r.absorb_rounding(t);
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(joint_precision(a, b));
  int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Mag term = mag();
  mul_abs_up(term, a.mid_.get(), b.rad_.get());
  mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
  mul_abs_up(term, b.mid_.get(), a.rad_.get());
  mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
  mpfr_mul(term.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
  r.absorb_rounding(t);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.contains_zero()) {
    throw InsufficientPrecision("division by a ball containing zero");
  }
  Ball r(joint_precision(a, b));
  int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);

  // |a/b - am/bm| <= (|am| rb + |bm| ra) / (|bm| (|bm| - rb))
  Mag num = mag();
  Mag term = mag();
  mul_abs_up(num, a.mid_.get(), b.rad_.get());
  mul_abs_up(term, b.mid_.get(), a.rad_.get());
  mpfr_add(num.get(), num.get(), term.get(), MPFR_RNDU);
  if (!mpfr_zero_p(num.get())) {
    Mag bm = abs_down(b.mid_.get());
    Mag gap = mag();
    mpfr_sub(gap.get(), bm.get(), b.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(gap.get()) <= 0) {
      throw InsufficientPrecision("divisor ball too close to zero");
    }
    mpfr_mul(gap.get(), gap.get(), bm.get(), MPFR_RNDD);
    mpfr_div(num.get(), num.get(), gap.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), num.get(), MPFR_RNDU);
  }
  r.absorb_rounding(t);
  return r;
}

Ball sqrt(const Ball& x) {
  if (x.is_negative()) {
    throw std::domain_error("sqrt of a negative ball");
  }
  Ball r(x.precision());
  BigFloat lo = x.lower();
  if (mpfr_sgn(lo.get()) > 0) {
    int t = mpfr_sqrt(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
    // Lipschitz bound 1 / (2 sqrt(lo)) on [lo, hi].
    Mag lip = mag();
    mpfr_sqrt(lip.get(), lo.get(), MPFR_RNDD);
    mpfr_mul_2ui(lip.get(), lip.get(), 1, MPFR_RNDD);
    mpfr_ui_div(lip.get(), 1, lip.get(), MPFR_RNDU);
    r.absorb_propagated(lip, x.rad_);
    r.absorb_rounding(t);
    return r;
  }
  // Ball touches zero: enclose [0, sqrt(hi)].
  BigFloat hi = x.upper();
  mpfr_sqrt(r.mid_.get(), hi.get(), MPFR_RNDU);
  mpfr_div_2ui(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDU);
  mpfr_set(r.rad_.get(), r.mid_.get(), MPFR_RNDU);
  return r;
}

Ball sin(const Ball& x) {
  Ball r(x.precision());
  int t = mpfr_sin(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), x.rad_.get(), MPFR_RNDU);
  r.absorb_rounding(t);
  return r;
}

Ball cos(const Ball& x) {
  Ball r(x.precision());
  int t = mpfr_cos(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), x.rad_.get(), MPFR_RNDU);
  r.absorb_rounding(t);
  return r;
}

Ball atan(const Ball& x) {
  Ball r(x.precision());
  int t = mpfr_atan(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), x.rad_.get(), MPFR_RNDU);
  r.absorb_rounding(t);
  return r;
}

Ball asin(const Ball& x) {
  Mag hi = abs_up(x.mid_.get());
  mpfr_add(hi.get(), hi.get(), x.rad_.get(), MPFR_RNDU);
  if (mpfr_cmp_ui(hi.get(), 1) >= 0) {
    throw InsufficientPrecision("asin argument not separated from +-1");
  }
  Ball r(x.precision());
  int t = mpfr_asin(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
  // Lipschitz bound 1 / sqrt(1 - hi^2).
  Mag lip = mag();
  mpfr_sqr(lip.get(), hi.get(), MPFR_RNDU);
  mpfr_ui_sub(lip.get(), 1, lip.get(), MPFR_RNDD);
  mpfr_sqrt(lip.get(), lip.get(), MPFR_RNDD);
  mpfr_ui_div(lip.get(), 1, lip.get(), MPFR_RNDU);
  r.absorb_propagated(lip, x.rad_);
  r.absorb_rounding(t);
  return r;
}

Ball exp(const Ball& x) {
  Ball r(x.precision());
  int t = mpfr_exp(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
  Mag lip = mag();
  mpfr_exp(lip.get(), x.upper().get(), MPFR_RNDU);
  r.absorb_propagated(lip, x.rad_);
  r.absorb_rounding(t);
  return r;
}

Ball cosh(const Ball& x) {
  Ball r(x.precision());
  int t = mpfr_cosh(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
  Mag lip = abs_up(x.mid_.get());
  mpfr_add(lip.get(), lip.get(), x.rad_.get(), MPFR_RNDU);
  mpfr_sinh(lip.get(), lip.get(), MPFR_RNDU);
  r.absorb_propagated(lip, x.rad_);
  r.absorb_rounding(t);
  return r;
}

Ball acosh(const Ball& x) {
  BigFloat lo = x.lower();
  if (mpfr_cmp_ui(lo.get(), 1) <= 0) {
    throw InsufficientPrecision("acosh argument not separated from 1");
  }
  Ball r(x.precision());
  int t = mpfr_acosh(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
  // Lipschitz bound 1 / sqrt(lo^2 - 1).
  Mag lip = mag();
  mpfr_sqr(lip.get(), lo.get(), MPFR_RNDD);
  mpfr_sub_ui(lip.get(), lip.get(), 1, MPFR_RNDD);
  if (mpfr_sgn(lip.get()) <= 0) {
    throw InsufficientPrecision("acosh argument not separated from 1");
  }
  mpfr_sqrt(lip.get(), lip.get(), MPFR_RNDD);
  mpfr_ui_div(lip.get(), 1, lip.get(), MPFR_RNDU);
  r.absorb_propagated(lip, x.rad_);
  r.absorb_rounding(t);
  return r;
}

Ball abs(const Ball& x) {
  if (!x.contains_zero()) {
    Ball r(x);
    mpfr_abs(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
  }
  Ball r(x.precision());
  Mag hi = abs_up(x.mid_.get());
  mpfr_add(hi.get(), hi.get(), x.rad_.get(), MPFR_RNDU);
  mpfr_div_2ui(hi.get(), hi.get(), 1, MPFR_RNDU);
  mpfr_set(r.mid_.get(), hi.get(), MPFR_RNDU);
  mpfr_set(r.rad_.get(), r.mid_.get(), MPFR_RNDU);
  return r;
}

Ball sqr(const Ball& x) { return x * x; }

Ball pow(const Ball& base, unsigned long exponent) {
  Ball result = Ball::from_integer(1L, base.precision());
  Ball square = base;
  while (exponent != 0) {
    if (exponent & 1UL) {
      result *= square;
    }
    exponent >>= 1;
    if (exponent != 0) {
      square = sqr(square);
    }
  }
  return result;
}

ComplexBall expi(const Ball& angle) { return {cos(angle), sin(angle)}; }

ComplexBall pow(const ComplexBall& base, unsigned long exponent) {
  ComplexBall result(Ball::from_integer(1L, base.precision()), Ball(base.precision()));
  ComplexBall square = base;
  while (exponent != 0) {
    if (exponent & 1UL) {
      result *= square;
    }
    exponent >>= 1;
    if (exponent != 0) {
      square *= square;
    }
  }
  return result;
}

Ball abs(const ComplexBall& z) { return sqrt(sqr(z.re) + sqr(z.im)); }

}  // namespace circtree

#include "circtree/closed_form.hpp"

namespace circtree {

namespace {

void require_beta_at_least_three(const CyclePowerSpec& spec) {
  spec.validate();
  if (spec.beta < 3) {
    throw InvalidSpec("the trigonometric cycle-power formula needs beta >= 3");
  }
  if (spec.beta > kMaxClosedFormBeta) {
    throw InvalidSpec("beta is too large for closed-form evaluation");
  }
}

mpz_class power(long base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), mpz_class(base).get_mpz_t(), exponent);
  return out;
}

mpq_class power(const mpq_class& base, unsigned long exponent) {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

bool is_power_n(const CyclePowerSpec& spec) { return spec.variant == PowerVariant::PowerN; }

}  // namespace

ComplexBall cycle_power_z(const CyclePowerSpec& spec, std::int64_t k, mpfr_prec_t prec) {
  spec.validate();
  if (k < 1 || k >= spec.beta) {
    throw std::out_of_range("z_k is defined for 1 <= k < beta");
  }
  const Ball angle = Ball::pi_times(k, spec.beta, prec);
  const Ball real = Ball::from_integer(2 * spec.n, prec) * cos(angle);
  const Ball imag_scale =
      Ball::from_integer(is_power_n(spec) ? -(2 * spec.n + 2) : 2 * spec.n - 2, prec);
  return {real, imag_scale * sin(angle)};
}

std::vector<CyclePowerTerm> cycle_power_terms(const CyclePowerSpec& spec, mpfr_prec_t prec) {
  require_beta_at_least_three(spec);
  const Ball two = Ball::from_integer(2L, prec);
  const Ball four_n_squared = Ball::from_integer(4 * spec.n * spec.n, prec);
  const bool power_n = is_power_n(spec);
  const Ball numerator = Ball::from_integer(power_n ? spec.n + 1 : spec.n - 1, prec);
  const Ball shift = Ball::from_integer(power_n ? 2 * spec.n + 1 : -(2 * spec.n - 1), prec);

  std::vector<CyclePowerTerm> terms;
  for (std::int64_t k = 1; k <= (spec.beta - 1) / 2; ++k) {
    Ball mu = two - two * cos(Ball::pi_times(2 * k, spec.beta, prec));
    ComplexBall z = cycle_power_z(spec, k, prec);
    Ball modulus = abs(z);
    // mu_k < 4 for 2k < beta, so the argument is strictly below 1; asin
    // refuses a ball that is not yet separated from 1.
    Ball argument = numerator / sqrt(four_n_squared / mu + shift);
    Ball theta = asin(argument);
    if (power_n) {
      theta = -theta;
    }
    terms.push_back(CyclePowerTerm{k, std::move(mu), std::move(z), std::move(modulus),
                                   std::move(argument), std::move(theta)});
  }
  return terms;
}

mpq_class CyclePowerLeadingFactor::value(std::int64_t n) const {
  mpq_class out(power(2, two_exponent), denominator);
  out.canonicalize();
  out *= mpq_class(power(static_cast<long>(n), n_exponent));
  out *= cycle_correction;
  out *= tail_correction;
  return out;
}

CyclePowerLeadingFactor cycle_power_leading_factor(const CyclePowerSpec& spec) {
  require_beta_at_least_three(spec);
  const auto beta = static_cast<unsigned long>(spec.beta);
  const auto n = static_cast<unsigned long>(spec.n);
  const long two_n = 2 * spec.n;

  CyclePowerLeadingFactor factor;
  factor.two_exponent = beta * (n + 1);
  factor.denominator = power(2 * spec.beta, 2);
  factor.n_exponent = beta * n - 2;
  if (is_power_n(spec)) {
    factor.cycle_correction = power(mpq_class(two_n + 1, two_n), beta * n);
    // 1 - (2n+1)^{-beta}
    const mpz_class big = power(two_n + 1, beta);
    factor.tail_correction = power(mpq_class(mpz_class(big - 1), big), n);
  } else {
    factor.cycle_correction = power(mpq_class(two_n - 1, two_n), beta * n);
    // |(-1)^beta - (2n-1)^{-beta}|
    const mpz_class big = power(two_n - 1, beta);
    const mpz_class sign = (beta % 2 == 0) ? 1 : -1;
    mpq_class inner(mpz_class(sign * big - 1), big);
    inner.canonicalize();
    factor.tail_correction = power(mpq_class(abs(inner)), n);
  }
  return factor;
}

Ball cycle_power_enclosure(const CyclePowerSpec& spec, mpfr_prec_t prec) {
  const auto terms = cycle_power_terms(spec, prec);
  const std::int64_t shift = is_power_n(spec) ? spec.n + 1 : spec.n - 1;
  const Ball n_ball = Ball::from_integer(spec.n, prec);

  Ball product = Ball::from_rational(cycle_power_leading_factor(spec).value(spec.n), prec);
  for (const auto& term : terms) {
    // pi (n +- 1) k / beta - n Arcsin(argument)
    const Ball arcsin = is_power_n(spec) ? -term.theta : term.theta;
    const Ball angle =
        Ball::pi_times((shift % (2 * spec.beta)) * term.k, spec.beta, prec) - n_ball * arcsin;
    product *= sqr(sin(angle));
  }
  return product;
}

mpz_class cycle_power_beta2(std::int64_t n, PowerVariant variant) {
  CyclePowerSpec{2, n, variant}.validate();
  const long two_n = 2 * n;
  mpq_class value(power(two_n, static_cast<unsigned long>(two_n - 2)));
  const long shifted = variant == PowerVariant::PowerN ? n + 1 : n - 1;
  value *= power(mpq_class(shifted, n), static_cast<unsigned long>(n));
  value.canonicalize();
  if (value.get_den() != 1) {
    throw std::logic_error("beta = 2 cycle-power count is not an integer");
  }
  return value.get_num();
}

CertifiedCount cycle_power_count(const CyclePowerSpec& spec, const PrecisionBudget& budget) {
  spec.validate();
  if (spec.beta == 2) {
    return CertifiedCount{TreeCount(cycle_power_beta2(spec.n, spec.variant)), true, 0,
                          std::nullopt};
  }
  return certify_count([&](mpfr_prec_t prec) { return cycle_power_enclosure(spec, prec); },
                       budget);
}

Ball asymptotic_limit(std::int64_t beta, PowerVariant variant, mpfr_prec_t prec) {
  const Ball half_beta = Ball::from_rational(mpq_class(beta, 2), prec);
  return exp(variant == PowerVariant::PowerN ? half_beta : -half_beta);
}

Ball corrected_asymptotic_limit(std::int64_t beta, PowerVariant variant, mpfr_prec_t prec) {
  if (beta < 2 || beta > kMaxClosedFormBeta) {
    throw InvalidSpec("beta must lie in [2, 2^24]");
  }
  const Ball half = Ball::from_rational(mpq_class(1, 2), prec);
  mpq_class scale(power(2, static_cast<unsigned long>(beta - 1)), beta);
  scale.canonicalize();
  Ball product = Ball::from_rational(scale, prec);
  for (std::int64_t k = 1; k <= (beta - 1) / 2; ++k) {
    const Ball shift = sin(Ball::pi_times(2 * k, beta, prec)) * half;
    product *= sqr(sin(Ball::pi_times(k, beta, prec) - shift));
  }
  return product * asymptotic_limit(beta, variant, prec);
}

Ball asymptotic_estimate(std::int64_t beta, std::int64_t n, PowerVariant variant,
                         mpfr_prec_t prec) {
  CyclePowerSpec{beta, n, variant}.validate();
  const auto bn = static_cast<unsigned long>(beta * n);
  mpq_class scale(power(2, bn) * power(n, bn - 2), 2 * beta);
  scale.canonicalize();
  return Ball::from_rational(scale, prec) * asymptotic_limit(beta, variant, prec);
}

mpq_class asymptotic_ratio(const TreeCount& count, std::int64_t beta, std::int64_t n) {
  if (beta < 2 || n < 1) {
    throw InvalidSpec("asymptotic ratio needs beta >= 2 and n >= 1");
  }
  const auto bn = static_cast<unsigned long>(beta * n);
  mpq_class ratio(count.value() * (2 * beta), power(2, bn) * power(n, bn - 2));
  ratio.canonicalize();
  return ratio;
}

}  // namespace circtree

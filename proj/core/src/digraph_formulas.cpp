#include "circtree/closed_form.hpp"

#include "circtree/cyclotomic.hpp"
#include "circtree/graph.hpp"

#include <numeric>

namespace circtree {

namespace {

void require_closed_form_beta(std::int64_t beta) {
  if (beta > kMaxClosedFormBeta) {
    throw InvalidSpec("beta is too large for closed-form evaluation");
  }
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

// e^{2 pi i r / beta}
ComplexBall beta_root(std::int64_t r, std::int64_t beta, mpfr_prec_t prec) {
  return expi(Ball::pi_times(2 * floor_mod(r, beta), beta, prec));
}

// 1 + sum_m zeta_beta^{gamma_m k}, which equals d - mu_k.
RootOfUnitySum shifted_generator_sum(const DirectedCirculantSpec& spec, std::int64_t k) {
  RootOfUnitySum w(spec.beta);
  w.add_power(0);
  for (auto gamma : spec.gammas) {
    w.add_power(gamma * k);
  }
  return w;
}

Ball half_pi_with_sign(int sign, mpfr_prec_t prec) {
  const Ball half_pi = Ball::pi_times(1, 2, prec);
  return sign > 0 ? half_pi : -half_pi;
}

// arg(re + i im) in (-pi, pi]; `exact` decides the cases a ball cannot.
Ball principal_argument(const Ball& re, const Ball& im, const RootOfUnitySum& exact,
                        mpfr_prec_t prec) {
  if (re.contains_zero()) {
    if (!im.contains_zero()) {
      const int im_sign = im.is_positive() ? 1 : -1;
      if (exact.real_part_is_zero()) {
        return half_pi_with_sign(im_sign, prec);
      }
      return half_pi_with_sign(im_sign, prec) - atan(re / im);
    }
    if (exact.is_zero()) {
      return Ball(prec);
    }
    throw InsufficientPrecision("argument of a complex ball near zero");
  }
  if (re.is_positive()) {
    return atan(im / re);
  }
  if (im.contains_zero()) {
    if (exact.imag_part_is_zero()) {
      return Ball::pi(prec);
    }
    throw InsufficientPrecision("argument near the negative real axis");
  }
  return atan(im / re) + (im.is_positive() ? Ball::pi(prec) : -Ball::pi(prec));
}

}  // namespace

std::vector<DigraphSpectralTerm> digraph_spectral_terms(const DirectedCirculantSpec& spec,
                                                        mpfr_prec_t prec,
                                                        bool with_principal_phase) {
  spec.validate();
  require_closed_form_beta(spec.beta);
  const long d = spec.generator_count();
  const Ball d_ball = Ball::from_integer(d, prec);
  const Ball two = Ball::from_integer(2L, prec);

  std::vector<DigraphSpectralTerm> terms;
  for (std::int64_t k = 1; k <= (spec.beta - 1) / 2; ++k) {
    ComplexBall roots(prec);
    for (auto gamma : spec.gammas) {
      roots += beta_root(gamma * k, spec.beta, prec);
    }
    const Ball d_minus_one = Ball::from_integer(d - 1, prec);
    ComplexBall mu(d_minus_one - roots.re, -roots.im);
    Ball eta = two * (d_minus_one - roots.re);
    Ball real_part = d_ball - eta / two;
    Ball modulus = sqrt(sqr(real_part) + sqr(roots.im)) / d_ball;

    const RootOfUnitySum exact = shifted_generator_sum(spec, k);
    int sign = 1;
    Ball phase(prec);
    if (real_part.contains_zero()) {
      if (!exact.real_part_is_zero()) {
        throw InsufficientPrecision("sign of d - eta/2 undecided");
      }
      // Limit of Arctg(s / x) as x -> 0+.
      if (!roots.im.contains_zero()) {
        phase = half_pi_with_sign(roots.im.is_positive() ? 1 : -1, prec);
      } else if (!exact.imag_part_is_zero()) {
        throw InsufficientPrecision("sign of the sine sum undecided");
      }
    } else {
      sign = real_part.is_positive() ? 1 : -1;
      phase = atan(roots.im / real_part);
    }

    std::optional<Ball> principal;
    if (with_principal_phase) {
      principal = principal_argument(real_part, roots.im, exact, prec);
    }
    terms.push_back(DigraphSpectralTerm{k, std::move(mu), std::move(eta), roots.im,
                                        std::move(real_part), sign, std::move(modulus),
                                        std::move(phase), std::move(principal)});
  }
  return terms;
}

mpq_class theorem1_prefactor(const DirectedCirculantSpec& spec) {
  spec.validate();
  const unsigned long d = static_cast<unsigned long>(spec.generator_count());
  const auto n = static_cast<unsigned long>(spec.n);
  mpz_class base;
  mpz_ui_pow_ui(base.get_mpz_t(), d, static_cast<unsigned long>(spec.beta) * n - 1);
  base *= spec.n;

  mpq_class correction = 1;
  if (spec.beta % 2 == 0) {
    long parity_sum = 1;
    for (auto gamma : spec.gammas) {
      parity_sum += (gamma % 2 == 0) ? 1 : -1;
    }
    mpz_class numerator;
    mpz_pow_ui(numerator.get_mpz_t(), mpz_class(parity_sum).get_mpz_t(), n);
    if (spec.p % 2 != 0) {
      numerator = -numerator;
    }
    mpz_class denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), d, n);
    correction -= mpq_class(numerator, denominator);
    correction.canonicalize();
  }
  return mpq_class(base) * correction;
}

Ball theorem1_enclosure(const DirectedCirculantSpec& spec, mpfr_prec_t prec,
                        Theorem1Form form) {
  spec.validate();
  if (spec.gammas.empty()) {
    throw InvalidSpec("the general digraph formula needs d >= 2 generators");
  }
  const bool principal = form == Theorem1Form::PrincipalPhase;
  const auto terms = digraph_spectral_terms(spec, prec, principal);

  const Ball one = Ball::from_integer(1L, prec);
  const Ball two = Ball::from_integer(2L, prec);
  const Ball n_ball = Ball::from_integer(spec.n, prec);
  const auto n = static_cast<unsigned long>(spec.n);
  const bool odd_n = spec.n % 2 != 0;

  Ball product = Ball::from_rational(theorem1_prefactor(spec), prec);
  for (const auto& term : terms) {
    const Ball& phase = principal ? *term.principal_phase : term.phase;
    const Ball rotation = Ball::pi_times(2 * floor_mod(spec.p * term.k, spec.beta), spec.beta, prec);
    const Ball modulus_n = pow(term.modulus, n);
    Ball cross = two * modulus_n * cos(rotation + n_ball * phase);
    if (!principal && odd_n && term.sign < 0) {
      cross = -cross;
    }
    product *= one - cross + sqr(modulus_n);
  }
  return product;
}

CertifiedCount theorem1_count(const DirectedCirculantSpec& spec, const PrecisionBudget& budget,
                              Theorem1Form form) {
  spec.validate();
  if (spec.gammas.empty()) {
    throw InvalidSpec("the general digraph formula needs d >= 2 generators");
  }
  if (auto reason = structural_zero(spec)) {
    return CertifiedCount{TreeCount(), true, 0, reason};
  }
  return certify_count(
      [&](mpfr_prec_t prec) { return theorem1_enclosure(spec, prec, form); }, budget);
}

ComplexBall betaproduct_enclosure(const DirectedCirculantSpec& spec, mpfr_prec_t prec) {
  spec.validate();
  require_closed_form_beta(spec.beta);
  const unsigned long d = static_cast<unsigned long>(spec.generator_count());
  const auto n = static_cast<unsigned long>(spec.n);

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), d, static_cast<unsigned long>(spec.beta) * n - 1);
  scale *= spec.n;
  mpz_class d_pow_n;
  mpz_ui_pow_ui(d_pow_n.get_mpz_t(), d, n);
  const Ball d_pow_n_ball = Ball::from_integer(d_pow_n, prec);
  const ComplexBall one(Ball::from_integer(1L, prec), Ball(prec));

  ComplexBall product = one;
  for (std::int64_t k = 1; k < spec.beta; ++k) {
    ComplexBall w = one;
    for (auto gamma : spec.gammas) {
      w += beta_root(gamma * k, spec.beta, prec);
    }
    const ComplexBall rotation = beta_root(spec.p * k, spec.beta, prec);
    product *= one - pow(w, n) * rotation / d_pow_n_ball;
  }
  return product * Ball::from_integer(scale, prec);
}

CertifiedCount betaproduct_count(const DirectedCirculantSpec& spec,
                                 const PrecisionBudget& budget) {
  spec.validate();
  if (std::gcd(spec.p, spec.n) != 1) {
    return CertifiedCount{TreeCount(), true, 0, ZeroReason::NotCoprime};
  }
  return certify_count([&](mpfr_prec_t prec) { return betaproduct_enclosure(spec, prec); },
                       budget);
}

Ball theorem2_enclosure(const DirectedCirculantSpec& spec, mpfr_prec_t prec) {
  spec.validate();
  require_closed_form_beta(spec.beta);
  if (spec.gammas.size() != 1) {
    throw InvalidSpec("the two-generator formula needs exactly one gamma");
  }
  const auto gamma = spec.gammas.front();
  const auto beta = spec.beta;
  const auto n = static_cast<unsigned long>(spec.n);
  const bool extra_two = beta % 2 == 0 && gamma % 2 == 0;

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2,
                static_cast<unsigned long>(beta) * n - 1 + (extra_two ? 1 : 0));
  scale *= spec.n;

  const Ball one = Ball::from_integer(1L, prec);
  const Ball two = Ball::from_integer(2L, prec);
  // 2 pi (p + gamma n / 2) k / beta = pi (2p + gamma n) k / beta
  const auto doubled_shift = floor_mod(2 * spec.p + gamma * spec.n, 2 * beta);

  Ball product = Ball::from_integer(scale, prec);
  for (std::int64_t k = 1; k <= (beta - 1) / 2; ++k) {
    const Ball c = cos(Ball::pi_times(floor_mod(gamma * k, 2 * beta), beta, prec));
    const Ball angle = Ball::pi_times(floor_mod(doubled_shift * k, 2 * beta), beta, prec);
    const Ball c_n = pow(c, n);
    product *= one - two * cos(angle) * c_n + sqr(c_n);
  }
  return product;
}

CertifiedCount theorem2_count(const DirectedCirculantSpec& spec, const PrecisionBudget& budget) {
  spec.validate();
  if (spec.gammas.size() != 1) {
    throw InvalidSpec("the two-generator formula needs exactly one gamma");
  }
  if (auto reason = structural_zero(spec)) {
    return CertifiedCount{TreeCount(), true, 0, reason};
  }
  return certify_count([&](mpfr_prec_t prec) { return theorem2_enclosure(spec, prec); },
                       budget);
}

TreeCount directed_cycle_count(std::int64_t p, std::int64_t n) {
  if (p < 1 || n < 1) {
    throw InvalidSpec("p and n must be positive integers");
  }
  return TreeCount(std::gcd(p, n) == 1 ? mpz_class(static_cast<long>(n)) : mpz_class(0));
}

}  // namespace circtree

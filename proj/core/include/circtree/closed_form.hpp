#pragma once

// Closed-form spanning-tree counts for two circulant families:
//
//  * directed circulants on beta*n vertices generated by
//    {p, gamma_1*n + p, ..., gamma_{d-1}*n + p}, as a product of
//    ceil(beta/2) - 1 trigonometric factors (general d, the d = 2 special
//    case, and the unpaired beta-term product they both come from);
//  * the n-th and (n-1)-th powers of the (beta*n)-cycle.
//
// Every transcendental evaluation runs in ball arithmetic and is rounded
// only once the enclosure isolates a single integer (see certify_count).

#include "circtree/ball.hpp"
#include "circtree/count.hpp"
#include "circtree/specs.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace circtree {

/// Closed forms iterate over beta; larger values are rejected.
inline constexpr std::int64_t kMaxClosedFormBeta = std::int64_t{1} << 24;

// ---------------------------------------------------------------------------
// Directed circulants

/// Per-k quantities of the general digraph product, k = 1..ceil(beta/2)-1.
struct DigraphSpectralTerm {
  std::int64_t k;
  ComplexBall mu;     // d - 1 - sum_m e^{2 pi i gamma_m k / beta}
  Ball eta;           // 2(d - 1) - 2 sum_m cos(2 pi gamma_m k / beta)
  Ball sinsum;        // sum_m sin(2 pi gamma_m k / beta)
  Ball real_part;     // d - eta/2, the real part of d - mu
  int sign;           // sgn(d - eta/2) with sgn(0) = 1, decided exactly
  Ball modulus;       // |1 - mu/d|
  Ball phase;         // Arctg(sinsum / (d - eta/2)); +-pi/2 limit when d - eta/2 = 0
  std::optional<Ball> principal_phase;  // arg(1 - mu/d) in (-pi, pi]
};

std::vector<DigraphSpectralTerm> digraph_spectral_terms(const DirectedCirculantSpec& spec,
                                                        mpfr_prec_t prec,
                                                        bool with_principal_phase = false);

/// n d^{beta n - 1} (1 - [beta even] (-1)^p (1 + sum_m (-1)^{gamma_m})^n / d^n), exact.
mpq_class theorem1_prefactor(const DirectedCirculantSpec& spec);

enum class Theorem1Form {
  /// The printed parity branches: Arctg phase, with the sgn factor for odd n.
  Literal,
  /// One branch for all n, using the true argument of 1 - mu_k/d.
  PrincipalPhase,
};

/// Enclosure of the general-d product formula. Requires d >= 2. Does not
/// short-circuit structural zeros.
Ball theorem1_enclosure(const DirectedCirculantSpec& spec, mpfr_prec_t prec,
                        Theorem1Form form = Theorem1Form::Literal);

CertifiedCount theorem1_count(const DirectedCirculantSpec& spec,
                              const PrecisionBudget& budget = {},
                              Theorem1Form form = Theorem1Form::Literal);

/// n d^{beta n - 1} prod_{k=1}^{beta-1} (1 - (1 + sum_m e^{2 pi i gamma_m k/beta})^n
/// e^{2 pi i p k / beta} / d^n), evaluated without pairing conjugate factors.
ComplexBall betaproduct_enclosure(const DirectedCirculantSpec& spec, mpfr_prec_t prec);

/// Zero when gcd(p, n) != 1; everything else is found numerically.
CertifiedCount betaproduct_count(const DirectedCirculantSpec& spec,
                                 const PrecisionBudget& budget = {});

/// Two-generator form: n 2^{beta n - 1 + [beta even][gamma even]} times
/// prod (1 - 2 cos(2 pi (p + gamma n/2) k/beta) cos^n(pi gamma k/beta)
/// + cos^{2n}(pi gamma k/beta)). Requires exactly one gamma.
Ball theorem2_enclosure(const DirectedCirculantSpec& spec, mpfr_prec_t prec);

CertifiedCount theorem2_count(const DirectedCirculantSpec& spec,
                              const PrecisionBudget& budget = {});

/// Spanning trees of the directed circulant on n vertices generated by p.
TreeCount directed_cycle_count(std::int64_t p, std::int64_t n);

// ---------------------------------------------------------------------------
// Cycle powers

/// Per-k quantities of the cycle-power product, k = 1..ceil(beta/2)-1.
struct CyclePowerTerm {
  std::int64_t k;
  Ball mu;               // 2 - 2 cos(2 pi k / beta)
  ComplexBall z;         // see cycle_power_z
  Ball modulus;          // |z|
  Ball arcsin_argument;  // (n+1)/sqrt(4n^2/mu + 2n + 1), or (n-1)/sqrt(4n^2/mu - (2n-1))
  Ball theta;            // arg z: -asin(argument) for power n, +asin(argument) for n-1
};

/// z_k = 2n cos(pi k/beta) - i(2n+2) sin(pi k/beta) for the n-th power and
/// 2n cos(pi k/beta) + i(2n-2) sin(pi k/beta) for the (n-1)-th; 1 <= k < beta.
ComplexBall cycle_power_z(const CyclePowerSpec& spec, std::int64_t k, mpfr_prec_t prec);

std::vector<CyclePowerTerm> cycle_power_terms(const CyclePowerSpec& spec, mpfr_prec_t prec);

/// The exact leading factor of the beta >= 3 formula, kept in printed form:
/// 2^{two_exponent} / denominator * n^{n_exponent} * cycle_correction * tail_correction.
struct CyclePowerLeadingFactor {
  unsigned long two_exponent;  // beta (n + 1)
  mpz_class denominator;       // (2 beta)^2
  unsigned long n_exponent;    // beta n - 2
  mpq_class cycle_correction;  // (1 + 1/(2n))^{beta n} or (1 - 1/(2n))^{beta n}
  mpq_class tail_correction;   // (1 - (2n+1)^{-beta})^n or |(-1)^beta - (2n-1)^{-beta}|^n

  mpq_class value(std::int64_t n) const;
};

CyclePowerLeadingFactor cycle_power_leading_factor(const CyclePowerSpec& spec);

/// Enclosure of the beta >= 3 formula.
Ball cycle_power_enclosure(const CyclePowerSpec& spec, mpfr_prec_t prec);

/// (2n)^{2n-2} (1 + 1/n)^n or (2n)^{2n-2} (1 - 1/n)^n, exact.
mpz_class cycle_power_beta2(std::int64_t n, PowerVariant variant);

/// beta = 2 is exact; beta >= 3 is certified.
CertifiedCount cycle_power_count(const CyclePowerSpec& spec, const PrecisionBudget& budget = {});

/// e^{beta/2} for the n-th power, e^{-beta/2} for the (n-1)-th.
Ball asymptotic_limit(std::int64_t beta, PowerVariant variant, mpfr_prec_t prec);

/// The actual limit of asymptotic_ratio as n grows:
/// e^{+-beta/2} (2^{beta-1}/beta) prod_{k=1}^{ceil(beta/2)-1} sin^2(pi k/beta - sin(2 pi k/beta)/2).
/// n Arcsin(...) differs from n pi k/beta by sin(2 pi k/beta)/2 in the limit,
/// so for beta >= 3 this differs from asymptotic_limit; both agree at beta = 2.
Ball corrected_asymptotic_limit(std::int64_t beta, PowerVariant variant, mpfr_prec_t prec);

/// 2^{beta n}/(2 beta) n^{beta n - 2} times asymptotic_limit.
Ball asymptotic_estimate(std::int64_t beta, std::int64_t n, PowerVariant variant,
                         mpfr_prec_t prec);

/// count * 2 beta / (2^{beta n} n^{beta n - 2}); tends to asymptotic_limit.
mpq_class asymptotic_ratio(const TreeCount& count, std::int64_t beta, std::int64_t n);

}  // namespace circtree

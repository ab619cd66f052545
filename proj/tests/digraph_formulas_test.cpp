#include "circtree/closed_form.hpp"

#include "circtree/graph.hpp"
#include "circtree/oracle.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <random>

namespace circtree {
namespace {

using Spec = DirectedCirculantSpec;

// beta in 2..6, n in 1..6, p in 1..4, one or two gammas.
std::vector<Spec> grid() {
  std::vector<Spec> specs;
  for (std::int64_t beta = 2; beta <= 6; ++beta) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (std::int64_t p = 1; p <= 4; ++p) {
        for (std::int64_t g1 = 1; g1 <= beta; ++g1) {
          specs.push_back({beta, n, p, {g1}});
          for (std::int64_t g2 = g1; g2 <= beta; ++g2) {
            specs.push_back({beta, n, p, {g1, g2}});
          }
        }
      }
    }
  }
  return specs;
}

std::vector<std::int64_t> residues(const Spec& spec) { return reduced_generators(spec); }

TEST(Theorem1, Examples) {
  EXPECT_EQ(theorem1_count({3, 3, 3, {2}}).count.value(), 0);
  EXPECT_EQ(theorem1_count({3, 3, 3, {2}}).zero_reason, ZeroReason::NotCoprime);
  EXPECT_EQ(theorem1_count({3, 3, 3, {2}}).bits_used, 0u);
  EXPECT_EQ(theorem1_count({3, 1, 3, {2}}).count.value(), 3);
  EXPECT_EQ(theorem1_count({3, 2, 3, {2}}).count.value(), 84);
  EXPECT_EQ(theorem1_count({3, 2, 3, {2}}, {}, Theorem1Form::PrincipalPhase).count.value(), 84);
  EXPECT_THROW(theorem1_count({3, 2, 3, {}}), InvalidSpec);
}

TEST(Theorem1, PrefactorIsExact) {
  // beta odd: n d^{beta n - 1}.
  EXPECT_EQ(theorem1_prefactor({3, 2, 3, {2}}), mpq_class(2 * 32));
  // beta = 2, gamma = 1, p = 1: 1 + (-1) = 0 so no correction.
  EXPECT_EQ(theorem1_prefactor({2, 3, 1, {1}}), mpq_class(3 * 32));
  // beta = 2, gamma = 2, p odd: 1 + 2^n / 2^n = 2.
  EXPECT_EQ(theorem1_prefactor({2, 1, 1, {2}}), mpq_class(4));
}

TEST(Betaproduct, Examples) {
  EXPECT_EQ(betaproduct_count({3, 1, 3, {2}}).count.value(), 3);
  EXPECT_EQ(betaproduct_count({6, 1, 2, {5}}).count.value(), 126);
  EXPECT_EQ(betaproduct_count({2, 1, 2, {2}}).count.value(), 0);
  EXPECT_EQ(betaproduct_count({4, 2, 2, {1}}).zero_reason, ZeroReason::NotCoprime);
}

TEST(Theorem2, Examples) {
  EXPECT_EQ(theorem2_count({3, 2, 3, {2}}).count.value(), 84);
  EXPECT_EQ(theorem2_count({6, 2, 2, {5}}).count.value(), 0);
  EXPECT_EQ(theorem2_count({6, 1, 2, {5}}).count.value(), 126);
  EXPECT_EQ(theorem2_count({2, 1, 2, {2}}).zero_reason, ZeroReason::AllEven);
  EXPECT_THROW(theorem2_count({3, 2, 3, {1, 2}}), InvalidSpec);
}

TEST(DirectedCycle, Examples) {
  EXPECT_EQ(directed_cycle_count(1, 7).value(), 7);
  EXPECT_EQ(directed_cycle_count(2, 4).value(), 0);
  EXPECT_EQ(directed_cycle_count(3, 4).value(), 4);
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t p = 1; p <= 12; ++p) {
      EXPECT_EQ(directed_cycle_count(p, n),
                tau_directed(GeneralCirculantInstance::directed(n, {p})));
    }
  }
}

// The first worked family: n (2^{3n-1} - 2^{2n} cos(pi n / 3) + 2^{n-1}).
TEST(Theorem1, FirstWorkedFamily) {
  const long frozen[] = {3, 84, 0, 8736, 79440, 0, 7283136, 67372032};
  for (std::int64_t n = 1; n <= 8; ++n) {
    const Spec spec{3, n, 3, {2}};
    const mpz_class expected(frozen[n - 1]);
    EXPECT_EQ(theorem1_count(spec).count.value(), expected) << n;
    EXPECT_EQ(tau_directed(reduce_to_instance(spec)).value(), expected) << n;
    if (n % 3 != 0) {
      // cos(pi n / 3) is +-1/2 off multiples of 3.
      const int cos_sign = (n % 6 == 1 || n % 6 == 5) ? 1 : -1;
      mpz_class a, b, c;
      mpz_ui_pow_ui(a.get_mpz_t(), 2, 3 * n - 1);
      mpz_ui_pow_ui(b.get_mpz_t(), 2, 2 * n - 1);
      mpz_ui_pow_ui(c.get_mpz_t(), 2, n - 1);
      EXPECT_EQ(expected, n * (a - cos_sign * b + c)) << n;
    }
  }
}

TEST(Theorem2, SecondWorkedFamily) {
  const long frozen[] = {126, 0, 103968, 0, 1024458240, 0};
  for (std::int64_t n = 1; n <= 6; ++n) {
    const Spec spec{6, n, 2, {5}};
    EXPECT_EQ(theorem2_count(spec).count.value(), frozen[n - 1]) << n;
    EXPECT_EQ(tau_directed(reduce_to_instance(spec)).value(), frozen[n - 1]) << n;
  }
}

TEST(SpectralTerms, Invariants) {
  const mpfr_prec_t prec = 192;
  for (const auto& spec : grid()) {
    if (spec.p != 1) {
      continue;
    }
    const Ball d = Ball::from_integer(static_cast<long>(spec.generator_count()), prec);
    const Ball two = Ball::from_integer(2L, prec);
    const auto terms = digraph_spectral_terms(spec, prec, true);
    ASSERT_EQ(static_cast<std::int64_t>(terms.size()), (spec.beta - 1) / 2);
    for (const auto& t : terms) {
      EXPECT_TRUE(t.eta.overlaps(two * t.mu.re)) << spec.describe();
      // 1 - mu/d from the polar data, both phase conventions.
      const ComplexBall target(Ball::from_integer(1L, prec) - t.mu.re / d, -t.mu.im / d);
      const ComplexBall principal = expi(*t.principal_phase) * t.modulus;
      EXPECT_TRUE(principal.overlaps(target)) << spec.describe() << " k=" << t.k;
      ComplexBall literal = expi(t.phase) * t.modulus;
      if (t.sign < 0) {
        literal = literal * Ball::from_integer(-1L, prec);
      }
      if (!t.real_part.contains_zero()) {
        EXPECT_TRUE(literal.overlaps(target)) << spec.describe() << " k=" << t.k;
      }
    }
  }
}

// A zero denominator d - eta/2 exercises the limit phase.
TEST(SpectralTerms, LimitPhaseAtZeroRealPart) {
  // beta = 6, gammas (2, 2): 1 + 2 zeta_3 has real part 0 at k = 1.
  const Spec spec{6, 1, 1, {2, 2}};
  const auto terms = digraph_spectral_terms(spec, 128, true);
  EXPECT_TRUE(terms[0].real_part.contains_zero());
  EXPECT_EQ(terms[0].sign, 1);
  EXPECT_TRUE(terms[0].phase.overlaps(Ball::pi_times(1, 2, 128)));
  EXPECT_EQ(theorem1_count(spec).count, tau_directed(reduce_to_instance(spec)));
}

TEST(DigraphProperties, GridAgreesWithOracleOnSample) {
  // The full grid runs in the acceptance binary; sample every third spec here.
  const auto specs = grid();
  for (std::size_t i = 0; i < specs.size(); i += 3) {
    const auto& spec = specs[i];
    const TreeCount oracle = tau_directed(reduce_to_instance(spec), CofactorCheck::CrossVertex);
    EXPECT_EQ(theorem1_count(spec).count, oracle) << spec.describe();
    EXPECT_EQ(betaproduct_count(spec).count, oracle) << spec.describe();
    if (spec.gammas.size() == 1) {
      EXPECT_EQ(theorem2_count(spec).count, oracle) << spec.describe();
    }
  }
}

TEST(DigraphProperties, BranchEquivalence) {
  for (const auto& spec : grid()) {
    if (is_structurally_zero(spec)) {
      continue;
    }
    const auto literal = theorem1_count(spec, {}, Theorem1Form::Literal);
    const auto principal = theorem1_count(spec, {}, Theorem1Form::PrincipalPhase);
    EXPECT_EQ(literal.count, principal.count) << spec.describe();
    const Ball a = theorem1_enclosure(spec, 256, Theorem1Form::Literal);
    const Ball b = theorem1_enclosure(spec, 256, Theorem1Form::PrincipalPhase);
    EXPECT_TRUE(a.overlaps(b)) << spec.describe();
  }
}

// Structural zeros imply a zero count; a zero count happens exactly when the
// generators share a factor with N, which the structural conditions do not
// exhaust.
TEST(DigraphProperties, ZeroConsistency) {
  int unstructured_zeros = 0;
  for (const auto& spec : grid()) {
    const bool structural = is_structurally_zero(spec);
    const bool shared_factor = testing::generator_gcd(spec.vertex_count(), residues(spec)) > 1;
    const auto closed = theorem1_count(spec);
    if (structural) {
      EXPECT_TRUE(closed.count.is_zero()) << spec.describe();
      EXPECT_TRUE(closed.zero_reason.has_value());
      EXPECT_TRUE(shared_factor) << spec.describe();
    }
    EXPECT_EQ(closed.count.is_zero(), shared_factor) << spec.describe();
    if (closed.count.is_zero() && !structural) {
      ++unstructured_zeros;
      EXPECT_FALSE(closed.zero_reason.has_value());
    }
  }
  EXPECT_GT(unstructured_zeros, 0);
}

// The product expressions only hold when gcd(p, n) = 1; the all-even zeros
// come out of the numerics on their own.
TEST(DigraphProperties, BareExpressionsOnStructuralZeros) {
  const Spec not_coprime{2, 2, 2, {1}};
  EXPECT_EQ(certify_count([&](mpfr_prec_t prec) { return theorem1_enclosure(not_coprime, prec); },
                          PrecisionBudget{})
                .count.value(),
            16);
  EXPECT_TRUE(theorem1_count(not_coprime).count.is_zero());
  for (const auto& spec : grid()) {
    if (structural_zero(spec) != ZeroReason::AllEven) {
      continue;
    }
    EXPECT_TRUE(certify_count([&](mpfr_prec_t prec) { return theorem1_enclosure(spec, prec); },
                              PrecisionBudget{})
                    .count.is_zero())
        << spec.describe();
    EXPECT_TRUE(certify_count([&](mpfr_prec_t prec) { return betaproduct_enclosure(spec, prec); },
                              PrecisionBudget{})
                    .count.is_zero())
        << spec.describe();
  }
}

TEST(Certification, StarvedBudgetNeverGuesses) {
  const PrecisionBudget starved{32, 32};
  EXPECT_THROW(theorem1_count({5, 6, 1, {1, 2}}, starved), PrecisionExhausted);
  EXPECT_THROW(betaproduct_count({5, 6, 1, {1, 2}}, starved), PrecisionExhausted);
  EXPECT_THROW(theorem2_count({5, 6, 1, {2}}, starved), PrecisionExhausted);
  try {
    theorem1_count({5, 6, 1, {1, 2}}, starved);
  } catch (const PrecisionExhausted& e) {
    EXPECT_EQ(e.bits_tried(), 32u);
  }

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<unsigned> bits(8, 64);
  const auto specs = grid();
  std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Spec& spec = specs[pick(rng)];
    const unsigned b = bits(rng);
    const TreeCount oracle = tau_directed(reduce_to_instance(spec));
    try {
      const auto result = theorem1_count(spec, {b, b});
      EXPECT_TRUE(result.certified);
      EXPECT_EQ(result.count, oracle) << spec.describe() << " bits=" << b;
    } catch (const PrecisionExhausted&) {
    }
    try {
      EXPECT_EQ(betaproduct_count(spec, {b, b}).count, oracle) << spec.describe();
    } catch (const PrecisionExhausted&) {
    }
  }
}

TEST(Certification, BudgetValidation) {
  EXPECT_THROW(theorem1_count({3, 2, 3, {2}}, {256, 128}), std::invalid_argument);
  EXPECT_THROW(theorem1_count({3, 2, 3, {2}}, {0, 128}), std::invalid_argument);
  const auto r = theorem1_count({3, 2, 3, {2}}, {16, 4096});
  EXPECT_EQ(r.count.value(), 84);
  EXPECT_GE(r.bits_used, 16u);
}

}  // namespace
}  // namespace circtree

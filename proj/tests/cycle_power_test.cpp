#include "circtree/closed_form.hpp"

#include "circtree/graph.hpp"
#include "circtree/oracle.hpp"

#include <gtest/gtest.h>

namespace circtree {
namespace {

constexpr auto kN = PowerVariant::PowerN;
constexpr auto kNMinus1 = PowerVariant::PowerNMinus1;

TEST(CyclePowerCount, Examples) {
  EXPECT_EQ(cycle_power_count({2, 1, kN}).count.value(), 2);
  EXPECT_EQ(cycle_power_count({3, 1, kN}).count.value(), 3);
  EXPECT_EQ(cycle_power_count({2, 2, kN}).count.value(), 36);
  EXPECT_EQ(cycle_power_count({2, 2, kNMinus1}).count.value(), 4);
  EXPECT_EQ(cycle_power_count({3, 2, kN}).count.value(), 384);
  EXPECT_EQ(cycle_power_count({2, 2, kN}).bits_used, 0u);
  EXPECT_EQ(cycle_power_count({3, 3, kN}).count.value(), 412164);
  EXPECT_EQ(cycle_power_count({6, 2, kNMinus1}).count.value(), 12);
}

TEST(CyclePowerCount, RejectsInvalidSpecs) {
  EXPECT_THROW(cycle_power_count({2, 1, kNMinus1}), InvalidSpec);
  EXPECT_THROW(cycle_power_count({1, 3, kN}), InvalidSpec);
  EXPECT_THROW(cycle_power_enclosure({2, 3, kN}, 128), InvalidSpec);
}

TEST(CyclePowerCount, BetaTwoClosedFormsMatchOracle) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(cycle_power_beta2(n, kN),
              tau_undirected(cycle_power_instance({2, n, kN})).value())
        << n;
    if (n >= 2) {
      EXPECT_EQ(cycle_power_beta2(n, kNMinus1),
                tau_undirected(cycle_power_instance({2, n, kNMinus1})).value())
          << n;
    }
  }
}

TEST(CyclePowerCount, GridMatchesOracle) {
  for (std::int64_t beta = 2; beta <= 6; ++beta) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (auto variant : {kN, kNMinus1}) {
        if (variant == kNMinus1 && n < 2) {
          continue;
        }
        const CyclePowerSpec spec{beta, n, variant};
        const TreeCount oracle = tau_undirected(cycle_power_instance(spec));
        EXPECT_EQ(cycle_power_count(spec).count, oracle) << spec.describe();
        EXPECT_EQ(eigenproduct_count(cycle_power_instance(spec)).count, oracle)
            << spec.describe();
      }
    }
  }
}

TEST(CyclePowerTerms, Invariants) {
  const mpfr_prec_t prec = 192;
  for (std::int64_t beta = 3; beta <= 9; ++beta) {
    for (std::int64_t n = 2; n <= 9; ++n) {
      for (auto variant : {kN, kNMinus1}) {
        const CyclePowerSpec spec{beta, n, variant};
        const Ball four_n2 = Ball::from_integer(4 * n * n, prec);
        const auto terms = cycle_power_terms(spec, prec);
        ASSERT_EQ(static_cast<std::int64_t>(terms.size()), (beta - 1) / 2);
        for (const auto& t : terms) {
          const Ball modulus2 = sqr(t.modulus);
          const Ball expected =
              variant == kN ? four_n2 + Ball::from_integer(2 * n + 1, prec) * t.mu
                            : four_n2 - Ball::from_integer(2 * n - 1, prec) * t.mu;
          EXPECT_TRUE(modulus2.overlaps(expected)) << spec.describe() << " k=" << t.k;
          EXPECT_TRUE((t.arcsin_argument - Ball::from_integer(1L, prec)).is_negative());
          EXPECT_TRUE(t.arcsin_argument.is_positive());
          // theta is the phase of z.
          EXPECT_TRUE((expi(t.theta) * t.modulus).overlaps(t.z)) << spec.describe();
        }
      }
    }
  }
}

TEST(CyclePowerTerms, ConjugatePhasesPairUp) {
  const mpfr_prec_t prec = 128;
  for (std::int64_t beta = 3; beta <= 8; ++beta) {
    const CyclePowerSpec spec{beta, 4, kN};
    for (std::int64_t k = 1; k < beta; ++k) {
      const ComplexBall a = cycle_power_z(spec, k, prec);
      const ComplexBall b = cycle_power_z(spec, beta - k, prec);
      // theta_{beta-k} = pi - theta_k: re flips, im stays.
      EXPECT_TRUE(a.re.overlaps(-b.re));
      EXPECT_TRUE(a.im.overlaps(b.im));
    }
    if (beta % 2 == 0) {
      const ComplexBall half = cycle_power_z(spec, beta / 2, prec);
      EXPECT_TRUE(half.re.contains_zero());
      EXPECT_TRUE(half.im.is_negative());
    }
  }
}

TEST(CyclePowerLeadingFactor, StructureAsPrinted) {
  for (std::int64_t beta = 3; beta <= 7; ++beta) {
    for (std::int64_t n = 1; n <= 7; ++n) {
      const auto f = cycle_power_leading_factor({beta, n, kN});
      EXPECT_EQ(f.n_exponent, static_cast<unsigned long>(beta * n - 2));
      EXPECT_EQ(f.two_exponent, static_cast<unsigned long>(beta * (n + 1)));
      EXPECT_EQ(f.denominator, mpz_class(4 * beta * beta));
      // The whole count is the leading factor times a product of squared
      // sines, each at most 1.
      const TreeCount count = cycle_power_count({beta, n, kN}).count;
      EXPECT_LE(mpq_class(count.value()), f.value(n));
    }
  }
}

TEST(Asymptotics, BetaTwoRatioIsExact) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto up = asymptotic_ratio(TreeCount(cycle_power_beta2(n, kN)), 2, n);
    mpq_class expected(mpz_class(n + 1), mpz_class(n));
    mpq_class power = 1;
    for (std::int64_t i = 0; i < n; ++i) {
      power *= expected;
    }
    EXPECT_EQ(up, power) << n;
    if (n >= 2) {
      const auto down = asymptotic_ratio(TreeCount(cycle_power_beta2(n, kNMinus1)), 2, n);
      mpq_class lower(mpz_class(n - 1), mpz_class(n));
      mpq_class lp = 1;
      for (std::int64_t i = 0; i < n; ++i) {
        lp *= lower;
      }
      EXPECT_EQ(down, lp) << n;
    }
  }
}

double relative_error(std::int64_t beta, std::int64_t n, PowerVariant variant, bool corrected) {
  const auto count = cycle_power_count({beta, n, variant}).count;
  const mpfr_prec_t prec = 128;
  const Ball ratio = Ball::from_rational(asymptotic_ratio(count, beta, n), prec);
  const Ball limit = corrected ? corrected_asymptotic_limit(beta, variant, prec)
                               : asymptotic_limit(beta, variant, prec);
  return abs(ratio / limit - Ball::from_integer(1L, prec)).mid().to_double();
}

TEST(Asymptotics, RatioConvergesToCorrectedLimit) {
  for (std::int64_t beta = 3; beta <= 5; ++beta) {
    for (auto variant : {kN, kNMinus1}) {
      const double e50 = relative_error(beta, 50, variant, true);
      const double e200 = relative_error(beta, 200, variant, true);
      EXPECT_LT(e200, 0.05) << beta;
      EXPECT_LT(e200, e50) << beta;
      // Halving-ish: the error is O(1/n).
      EXPECT_LT(e200, 0.5 * e50) << beta;
    }
  }
}

TEST(Asymptotics, UncorrectedLimitIsOffForBetaAtLeastThree) {
  for (std::int64_t beta = 3; beta <= 5; ++beta) {
    EXPECT_GT(relative_error(beta, 200, kN, false), 0.5) << beta;
  }
}

TEST(Asymptotics, CorrectedLimitAgreesAtBetaTwo) {
  const mpfr_prec_t prec = 128;
  for (auto variant : {kN, kNMinus1}) {
    EXPECT_TRUE(corrected_asymptotic_limit(2, variant, prec)
                    .overlaps(asymptotic_limit(2, variant, prec)));
  }
  // beta = 3: e^{3/2} (4/3) sin^2(pi/3 - sqrt(3)/4).
  const Ball three = corrected_asymptotic_limit(3, kN, prec);
  EXPECT_NEAR(three.mid().to_double(), 1.9845701315964, 1e-12);
}

TEST(Asymptotics, EstimateIsScaleTimesLimit) {
  const mpfr_prec_t prec = 256;
  const auto count = cycle_power_count({3, 10, kN}).count;
  const Ball est = asymptotic_estimate(3, 10, kN, prec);
  const Ball back = Ball::from_rational(asymptotic_ratio(count, 3, 10), prec) * est /
                    asymptotic_limit(3, kN, prec);
  EXPECT_TRUE(back.contains(count.value()));
  EXPECT_TRUE(asymptotic_limit(2, kN, prec).overlaps(exp(Ball::from_integer(1L, prec))));
}

TEST(Certification, CyclePowerStarvation) {
  EXPECT_THROW(cycle_power_count({5, 6, kN}, {32, 32}), PrecisionExhausted);
  EXPECT_THROW(cycle_power_count({4, 8, kNMinus1}, {32, 32}), PrecisionExhausted);
  for (unsigned bits = 8; bits <= 80; bits += 6) {
    const CyclePowerSpec spec{4, 4, kN};
    try {
      EXPECT_EQ(cycle_power_count(spec, {bits, bits}).count,
                tau_undirected(cycle_power_instance(spec)));
    } catch (const PrecisionExhausted&) {
    }
  }
}

}  // namespace
}  // namespace circtree

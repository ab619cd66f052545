#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace circtree {

/// Coefficients (constant term first) of the order-th cyclotomic polynomial.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t order);

/// An exact element sum_j c_j * zeta^j of Z[zeta], zeta = e^{2 pi i / order}.
///
/// Used to decide exact vanishing of sums of roots of unity (and of their
/// real and imaginary parts), which interval arithmetic alone cannot do.
class RootOfUnitySum {
 public:
  explicit RootOfUnitySum(std::int64_t order);

  std::int64_t order() const { return order_; }
  RootOfUnitySum& add_power(std::int64_t exponent, long coefficient = 1);

  bool is_zero() const;
  bool real_part_is_zero() const;
  bool imag_part_is_zero() const;

 private:
  // Reduces a polynomial in zeta (exponents already mod order) modulo the
  // cyclotomic polynomial and reports whether the remainder vanishes.
  bool vanishes(std::vector<mpz_class> coeffs) const;

  std::int64_t order_;
  std::vector<long> coeffs_;
};

}  // namespace circtree

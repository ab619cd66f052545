#include "circtree/cyclotomic.hpp"

#include <stdexcept>

namespace circtree {

namespace {

int moebius(std::int64_t m) {
  int sign = 1;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      m /= q;
      if (m % q == 0) {
        return 0;
      }
      sign = -sign;
    }
  }
  if (m > 1) {
    sign = -sign;
  }
  return sign;
}

// p * (x^d - 1)
void multiply_binomial(std::vector<mpz_class>& p, std::int64_t d) {
  std::vector<mpz_class> out(p.size() + static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + static_cast<std::size_t>(d)] += p[i];
    out[i] -= p[i];
  }
  p = std::move(out);
}

// p / (x^d - 1), exact.
void divide_binomial(std::vector<mpz_class>& p, std::int64_t d) {
  const auto shift = static_cast<std::size_t>(d);
  if (p.size() <= shift) {
    throw std::logic_error("cyclotomic: inexact binomial division");
  }
  std::vector<mpz_class> q(p.size() - shift);
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = (i >= shift ? q[i - shift] : mpz_class(0)) - p[i];
  }
  p = std::move(q);
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::int64_t order) {
  if (order < 1) {
    throw std::invalid_argument("cyclotomic polynomial order must be positive");
  }
  std::vector<std::int64_t> numerator, denominator;
  for (std::int64_t d = 1; d <= order; ++d) {
    if (order % d != 0) {
      continue;
    }
    switch (moebius(order / d)) {
      case 1:
        numerator.push_back(d);
        break;
      case -1:
        denominator.push_back(d);
        break;
      default:
        break;
    }
  }
  std::vector<mpz_class> phi{1};
  for (auto d : numerator) {
    multiply_binomial(phi, d);
  }
  for (auto d : denominator) {
    divide_binomial(phi, d);
  }
  return phi;
}

RootOfUnitySum::RootOfUnitySum(std::int64_t order)
    : order_(order), coeffs_(static_cast<std::size_t>(order > 0 ? order : 0), 0) {
  if (order < 1) {
    throw std::invalid_argument("root of unity order must be positive");
  }
}

RootOfUnitySum& RootOfUnitySum::add_power(std::int64_t exponent, long coefficient) {
  auto r = exponent % order_;
  if (r < 0) {
    r += order_;
  }
  coeffs_[static_cast<std::size_t>(r)] += coefficient;
  return *this;
}

bool RootOfUnitySum::vanishes(std::vector<mpz_class> f) const {
  const auto phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = f.size(); i-- > deg;) {
    if (f[i] == 0) {
      continue;
    }
    const mpz_class c = f[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      f[i - deg + j] -= c * phi[j];
    }
  }
  for (std::size_t i = 0; i < deg && i < f.size(); ++i) {
    if (f[i] != 0) {
      return false;
    }
  }
  return true;
}

bool RootOfUnitySum::is_zero() const {
  return vanishes(std::vector<mpz_class>(coeffs_.begin(), coeffs_.end()));
}

// 2 Re(z) = z + conj(z), and conj(zeta^j) = zeta^{order - j}.
bool RootOfUnitySum::real_part_is_zero() const {
  std::vector<mpz_class> f(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    f[j] += coeffs_[j];
    f[(coeffs_.size() - j) % coeffs_.size()] += coeffs_[j];
  }
  return vanishes(std::move(f));
}

bool RootOfUnitySum::imag_part_is_zero() const {
  std::vector<mpz_class> f(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    f[j] += coeffs_[j];
    f[(coeffs_.size() - j) % coeffs_.size()] -= coeffs_[j];
  }
  return vanishes(std::move(f));
}

}  // namespace circtree

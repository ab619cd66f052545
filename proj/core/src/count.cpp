#include "circtree/count.hpp"

namespace circtree {

TreeCount::TreeCount(mpz_class value) : value_(std::move(value)) {
  if (value_ < 0) {
    throw std::invalid_argument("tree count must be nonnegative");
  }
}

std::size_t TreeCount::digits() const { return value_.get_str().size(); }

std::string to_string(ZeroReason reason) {
  switch (reason) {
    case ZeroReason::NotCoprime:
      return "gcd(p,n)!=1";
    case ZeroReason::AllEven:
      return "all-even";
  }
  return "unknown";
}

void PrecisionBudget::validate() const {
  if (start_bits < MPFR_PREC_MIN || start_bits > cap_bits) {
    throw std::invalid_argument("precision budget requires 2 <= start_bits <= cap_bits");
  }
}

PrecisionExhausted::PrecisionExhausted(unsigned bits)
    : std::runtime_error("could not certify the count within " + std::to_string(bits) +
                         " bits of precision"),
      bits_(bits) {}

std::optional<mpz_class> isolate_count(const Ball& enclosure) {
  if (!enclosure.radius_below(0.125)) {
    return std::nullopt;
  }
  auto value = enclosure.unique_integer();
  if (value && *value < 0) {
    throw std::logic_error("enclosure isolates a negative count: " + value->get_str());
  }
  return value;
}

std::optional<mpz_class> isolate_count(const ComplexBall& enclosure) {
  if (!enclosure.im.radius_below(0.125)) {
    return std::nullopt;
  }
  if (!enclosure.im.contains_zero()) {
    throw std::logic_error("count enclosure has a nonzero imaginary part: " +
                           enclosure.im.to_string());
  }
  return isolate_count(enclosure.re);
}

}  // namespace circtree

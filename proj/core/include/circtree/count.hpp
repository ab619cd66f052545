#pragma once

#include "circtree/ball.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace circtree {

/// Exact spanning-tree (or arborescence) count.
class TreeCount {
 public:
  TreeCount() = default;
  explicit TreeCount(mpz_class value);

  const mpz_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::string to_string() const { return value_.get_str(); }
  /// Number of decimal digits (1 for zero).
  std::size_t digits() const;

  friend bool operator==(const TreeCount& a, const TreeCount& b) { return a.value_ == b.value_; }

 private:
  mpz_class value_{0};
};

/// Why a digraph count is zero without any numeric work.
enum class ZeroReason { NotCoprime, AllEven };

std::string to_string(ZeroReason reason);

struct PrecisionBudget {
  unsigned start_bits = 128;
  unsigned cap_bits = 65536;

  void validate() const;
};

class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(unsigned bits);
  unsigned bits_tried() const { return bits_; }

 private:
  unsigned bits_;
};

/// Result of a closed-form evaluation. `bits_used` is 0 for results that
/// never touched interval arithmetic (structural zeros, exact rational forms).
struct CertifiedCount {
  TreeCount count;
  bool certified = true;
  unsigned bits_used = 0;
  std::optional<ZeroReason> zero_reason;
};

/// Interprets `enclosure` as containing a nonnegative integer. Returns the
/// integer when the ball is narrower than 1/4 and isolates exactly one.
std::optional<mpz_class> isolate_count(const Ball& enclosure);
std::optional<mpz_class> isolate_count(const ComplexBall& enclosure);

/// Evaluates `enclosure(bits)` at start_bits, doubling until the result
/// isolates an integer. Throws PrecisionExhausted once cap_bits has been
/// tried without success.
template <class Evaluate>
CertifiedCount certify_count(Evaluate&& enclosure, const PrecisionBudget& budget) {
  budget.validate();
  unsigned bits = budget.start_bits;
  for (;;) {
    try {
      if (auto value = isolate_count(enclosure(static_cast<mpfr_prec_t>(bits)))) {
        return CertifiedCount{TreeCount(std::move(*value)), true, bits, std::nullopt};
      }
    } catch (const InsufficientPrecision&) {
      // retry with more bits
    }
    if (bits >= budget.cap_bits) {
      throw PrecisionExhausted(bits);
    }
    bits = bits > budget.cap_bits / 2 ? budget.cap_bits : 2 * bits;
  }
}

}  // namespace circtree

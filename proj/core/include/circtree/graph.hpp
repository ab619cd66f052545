#pragma once

#include "circtree/ball.hpp"
#include "circtree/count.hpp"
#include "circtree/specs.hpp"

#include <optional>

namespace circtree {

/// Generator residues {p mod N} and {(gamma_m*n + p) mod N}, in generator
/// order and with repetitions.
std::vector<std::int64_t> reduced_generators(const DirectedCirculantSpec& spec);

GeneralCirculantInstance reduce_to_instance(const DirectedCirculantSpec& spec);

/// Undirected instance with generators 1..k (k = n or n-1); the half-turn
/// generator N/2 joins v to v+N/2 and v-N/2 and so carries multiplicity 2.
GeneralCirculantInstance cycle_power_instance(const CyclePowerSpec& spec);

/// Out-degree Laplacian (directed) or degree Laplacian (undirected), with
/// multiplicities. Loops add to both D and A and so cancel.
LaplacianMatrix laplacian(const GeneralCirculantInstance& instance);

/// lambda_k = d - sum over reduced generators g of e^{2 pi i g k / N}.
ComplexBall digraph_eigenvalue(const DirectedCirculantSpec& spec, std::int64_t k,
                               mpfr_prec_t prec);

/// lambda_k = 2K - 2 sum_{m=1}^{K} cos(2 pi k m / N), K the power.
Ball cycle_power_eigenvalue(const CyclePowerSpec& spec, std::int64_t k, mpfr_prec_t prec);

/// Laplacian eigenvalue of an arbitrary instance for the character k,
/// computed from its generator multiplicities.
ComplexBall instance_eigenvalue(const GeneralCirculantInstance& instance, std::int64_t k,
                                mpfr_prec_t prec);

/// Zero-count conditions stated by the digraph theorems: gcd(p, n) != 1, or
/// beta, p and every gamma even. These are sufficient, not necessary: other
/// disconnected parameter choices also count zero.
std::optional<ZeroReason> structural_zero(const DirectedCirculantSpec& spec);

inline bool is_structurally_zero(const DirectedCirculantSpec& spec) {
  return structural_zero(spec).has_value();
}

}  // namespace circtree

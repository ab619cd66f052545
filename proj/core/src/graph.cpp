#include "circtree/graph.hpp"

#include <numeric>

namespace circtree {

namespace {

void require_index(std::int64_t k, std::int64_t vertices) {
  if (k < 0 || k >= vertices) {
    throw std::out_of_range("eigenvalue index must lie in [0, N)");
  }
}

// e^{2 pi i r / N} for an integer r.
ComplexBall root_of_unity(std::int64_t r, std::int64_t vertices, mpfr_prec_t prec) {
  auto reduced = r % vertices;
  return expi(Ball::pi_times(2 * reduced, vertices, prec));
}

}  // namespace

std::vector<std::int64_t> reduced_generators(const DirectedCirculantSpec& spec) {
  spec.validate();
  const auto vertices = spec.vertex_count();
  std::vector<std::int64_t> residues;
  residues.reserve(spec.gammas.size() + 1);
  residues.push_back(spec.p % vertices);
  for (auto gamma : spec.gammas) {
    residues.push_back((gamma * spec.n + spec.p) % vertices);
  }
  return residues;
}

GeneralCirculantInstance reduce_to_instance(const DirectedCirculantSpec& spec) {
  return GeneralCirculantInstance::directed(spec.vertex_count(), reduced_generators(spec));
}

GeneralCirculantInstance cycle_power_instance(const CyclePowerSpec& spec) {
  spec.validate();
  const auto vertices = spec.vertex_count();
  GeneralCirculantInstance::Multiplicities generators;
  for (std::int64_t g = 1; g <= spec.power(); ++g) {
    generators[g] = (2 * g == vertices) ? 2 : 1;
  }
  return GeneralCirculantInstance::undirected(vertices, generators);
}

LaplacianMatrix laplacian(const GeneralCirculantInstance& instance) {
  const auto vertices = instance.vertex_count();
  LaplacianMatrix L(vertices);
  for (std::int64_t v = 0; v < vertices; ++v) {
    for (const auto& [g, mult] : instance.generators()) {
      const auto forward = (v + g) % vertices;
      L.at(v, v) += mult;
      L.at(v, forward) -= mult;
      if (!instance.is_directed() && 2 * g != vertices) {
        const auto backward = (v - g + vertices) % vertices;
        L.at(v, v) += mult;
        L.at(v, backward) -= mult;
      }
    }
  }
  return L;
}

ComplexBall digraph_eigenvalue(const DirectedCirculantSpec& spec, std::int64_t k,
                               mpfr_prec_t prec) {
  const auto residues = reduced_generators(spec);
  const auto vertices = spec.vertex_count();
  require_index(k, vertices);
  if (k == 0) {
    return ComplexBall(prec);
  }
  ComplexBall lambda(Ball::from_integer(static_cast<long>(spec.generator_count()), prec),
                     Ball(prec));
  for (auto r : residues) {
    lambda -= root_of_unity(r * k, vertices, prec);
  }
  return lambda;
}

Ball cycle_power_eigenvalue(const CyclePowerSpec& spec, std::int64_t k, mpfr_prec_t prec) {
  spec.validate();
  const auto vertices = spec.vertex_count();
  require_index(k, vertices);
  if (k == 0) {
    return Ball(prec);
  }
  const auto power = spec.power();
  Ball cosines(prec);
  for (std::int64_t m = 1; m <= power; ++m) {
    cosines += cos(Ball::pi_times(2 * ((k * m) % vertices), vertices, prec));
  }
  return Ball::from_integer(2 * power, prec) - Ball::from_integer(2L, prec) * cosines;
}

ComplexBall instance_eigenvalue(const GeneralCirculantInstance& instance, std::int64_t k,
                                mpfr_prec_t prec) {
  const auto vertices = instance.vertex_count();
  require_index(k, vertices);
  ComplexBall lambda(prec);
  if (k == 0) {
    return lambda;
  }
  const Ball one = Ball::from_integer(1L, prec);
  for (const auto& [g, mult] : instance.generators()) {
    const Ball weight = Ball::from_integer(mult, prec);
    const ComplexBall w = root_of_unity(g * k, vertices, prec);
    if (instance.is_directed()) {
      lambda += ComplexBall(one - w.re, -w.im) * weight;
    } else if (2 * g == vertices) {
      lambda.re += (one - w.re) * weight;
    } else {
      lambda.re += Ball::from_integer(2L, prec) * (one - w.re) * weight;
    }
  }
  return lambda;
}

std::optional<ZeroReason> structural_zero(const DirectedCirculantSpec& spec) {
  spec.validate();
  if (std::gcd(spec.p, spec.n) != 1) {
    return ZeroReason::NotCoprime;
  }
  const auto even = [](std::int64_t x) { return x % 2 == 0; };
  bool all_even = even(spec.beta) && even(spec.p);
  for (auto gamma : spec.gammas) {
    all_even = all_even && even(gamma);
  }
  if (all_even) {
    return ZeroReason::AllEven;
  }
  return std::nullopt;
}

}  // namespace circtree

#include "circtree/specs.hpp"

#include <sstream>

namespace circtree {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw InvalidSpec(message);
  }
}

}  // namespace

void DirectedCirculantSpec::validate() const {
  require(beta >= 1, "beta must be a positive integer");
  require(n >= 1, "n must be a positive integer");
  require(p >= 1, "p must be a positive integer");
  require(p < kMaxVertices && beta <= kMaxVertices / n, "vertex count beta*n is too large");
  for (std::size_t m = 0; m < gammas.size(); ++m) {
    require(gammas[m] >= 1 && gammas[m] <= beta, "every gamma must lie in [1, beta]");
    require(m == 0 || gammas[m - 1] <= gammas[m], "gammas must be nondecreasing");
  }
}

std::string DirectedCirculantSpec::describe() const {
  std::ostringstream out;
  out << "beta=" << beta << " n=" << n << " p=" << p << " gammas=(";
  for (std::size_t m = 0; m < gammas.size(); ++m) {
    out << (m ? "," : "") << gammas[m];
  }
  out << ")";
  return out.str();
}

std::string to_string(PowerVariant variant) {
  return variant == PowerVariant::PowerN ? "n" : "n-1";
}

void CyclePowerSpec::validate() const {
  require(beta >= 2, "beta must be at least 2");
  require(n >= 1, "n must be a positive integer");
  require(beta <= kMaxVertices / n, "vertex count beta*n is too large");
  require(variant == PowerVariant::PowerN || n >= 2,
          "the (n-1)-th power requires n >= 2");
}

std::string CyclePowerSpec::describe() const {
  std::ostringstream out;
  out << "beta=" << beta << " n=" << n << " power=" << to_string(variant);
  return out.str();
}

GeneralCirculantInstance GeneralCirculantInstance::directed(
    std::int64_t vertices, const std::vector<std::int64_t>& generators) {
  require(vertices >= 1 && vertices <= kMaxVertices, "vertex count out of range");
  Multiplicities residues;
  for (auto g : generators) {
    auto r = g % vertices;
    residues[r < 0 ? r + vertices : r] += 1;
  }
  return {vertices, true, std::move(residues)};
}

GeneralCirculantInstance GeneralCirculantInstance::undirected(std::int64_t vertices,
                                                              const Multiplicities& generators) {
  require(vertices >= 1 && vertices <= kMaxVertices, "vertex count out of range");
  Multiplicities residues;
  for (const auto& [g, mult] : generators) {
    require(mult >= 1, "generator multiplicities must be positive");
    auto r = g % vertices;
    if (r < 0) {
      r += vertices;
    }
    require(r != 0, "undirected instances cannot carry loops");
    residues[2 * r > vertices ? vertices - r : r] += mult;
  }
  return {vertices, false, std::move(residues)};
}

std::int64_t GeneralCirculantInstance::multiplicity(std::int64_t residue) const {
  auto it = generators_.find(residue);
  return it == generators_.end() ? 0 : it->second;
}

std::int64_t GeneralCirculantInstance::degree() const {
  std::int64_t total = 0;
  for (const auto& [g, mult] : generators_) {
    total += (directed_ || 2 * g == vertices_) ? mult : 2 * mult;
  }
  return total;
}

LaplacianMatrix::LaplacianMatrix(std::int64_t size)
    : size_(size), entries_(static_cast<std::size_t>(size * size), 0) {
  if (size < 0) {
    throw std::invalid_argument("matrix size must be nonnegative");
  }
}

std::int64_t LaplacianMatrix::trace() const {
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < size_; ++i) {
    total += at(i, i);
  }
  return total;
}

bool LaplacianMatrix::rows_sum_to_zero() const {
  for (std::int64_t i = 0; i < size_; ++i) {
    std::int64_t sum = 0;
    for (std::int64_t j = 0; j < size_; ++j) {
      sum += at(i, j);
    }
    if (sum != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace circtree

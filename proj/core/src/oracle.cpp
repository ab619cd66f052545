#include "circtree/oracle.hpp"

#include "circtree/graph.hpp"

#include <utility>

namespace circtree {

mpz_class bareiss_determinant(ExactMatrix m) {
  const std::size_t size = m.size();
  if (size == 0) {
    return 1;
  }
  int sign = 1;
  mpz_class previous = 1;
  mpz_class scratch;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m.at(swap_row, k) == 0) {
        ++swap_row;
      }
      if (swap_row == size) {
        return 0;
      }
      for (std::size_t j = k; j < size; ++j) {
        std::swap(m.at(k, j), m.at(swap_row, j));
      }
      sign = -sign;
    }
    const mpz_class& pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        // m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / previous
        mpz_mul(scratch.get_mpz_t(), m.at(i, j).get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(scratch.get_mpz_t(), m.at(i, k).get_mpz_t(), m.at(k, j).get_mpz_t());
        mpz_divexact(m.at(i, j).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    previous = pivot;
  }
  mpz_class det = m.at(size - 1, size - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

TreeCount cofactor_count(const LaplacianMatrix& laplacian, std::int64_t vertex) {
  const auto size = laplacian.size();
  if (vertex < 0 || vertex >= size) {
    throw std::out_of_range("cofactor vertex out of range");
  }
  ExactMatrix minor(static_cast<std::size_t>(size - 1));
  std::size_t row = 0;
  for (std::int64_t i = 0; i < size; ++i) {
    if (i == vertex) {
      continue;
    }
    std::size_t col = 0;
    for (std::int64_t j = 0; j < size; ++j) {
      if (j == vertex) {
        continue;
      }
      minor.at(row, col++) = static_cast<long>(laplacian.at(i, j));
    }
    ++row;
  }
  return TreeCount(bareiss_determinant(std::move(minor)));
}

TreeCount tau_directed(const GeneralCirculantInstance& instance, CofactorCheck check) {
  if (!instance.is_directed()) {
    throw std::invalid_argument("tau_directed requires a directed instance");
  }
  const auto L = laplacian(instance);
  const TreeCount converging = cofactor_count(L, 0);
  if (check == CofactorCheck::CrossVertex && instance.vertex_count() > 1) {
    const TreeCount other = cofactor_count(L, instance.vertex_count() / 2);
    if (!(other == converging)) {
      throw std::logic_error("cofactors differ across vertices of a circulant digraph");
    }
  }
  return TreeCount(converging.value() * instance.vertex_count());
}

TreeCount tau_undirected(const GeneralCirculantInstance& instance) {
  if (instance.is_directed()) {
    throw std::invalid_argument("tau_undirected requires an undirected instance");
  }
  return cofactor_count(laplacian(instance), 0);
}

TreeCount tau_matrix_tree(const GeneralCirculantInstance& instance) {
  return instance.is_directed() ? tau_directed(instance) : tau_undirected(instance);
}

ComplexBall tau_eigenproduct(const GeneralCirculantInstance& instance, mpfr_prec_t prec) {
  const auto vertices = instance.vertex_count();
  ComplexBall product(Ball::from_integer(1L, prec), Ball(prec));
  for (std::int64_t k = 1; k < vertices; ++k) {
    const ComplexBall lambda = instance_eigenvalue(instance, k, prec);
    if (instance.is_directed()) {
      product *= lambda;
    } else {
      product.re *= lambda.re;
    }
  }
  if (!instance.is_directed()) {
    product.re /= Ball::from_integer(vertices, prec);
  }
  return product;
}

CertifiedCount eigenproduct_count(const GeneralCirculantInstance& instance,
                                  const PrecisionBudget& budget) {
  return certify_count(
      [&](mpfr_prec_t prec) { return tau_eigenproduct(instance, prec); }, budget);
}

}  // namespace circtree

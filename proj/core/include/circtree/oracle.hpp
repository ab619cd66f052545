#pragma once

// Ground-truth counts via exact cofactor determinants (Kirchhoff / Tutte)
// and an independent certified product of Laplacian eigenvalues.
//
// Nothing here consults the structural-zero predicate: disconnected
// instances must come out as zero on their own.

#include "circtree/ball.hpp"
#include "circtree/count.hpp"
#include "circtree/specs.hpp"

#include <gmpxx.h>

namespace circtree {

class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t size) : size_(size), entries_(size * size) {}

  std::size_t size() const { return size_; }
  mpz_class& at(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
  const mpz_class& at(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }

 private:
  std::size_t size_;
  std::vector<mpz_class> entries_;
};

/// Fraction-free (Bareiss) elimination; consumes its argument as scratch.
mpz_class bareiss_determinant(ExactMatrix matrix);

/// Determinant of `laplacian` with row and column `vertex` removed.
TreeCount cofactor_count(const LaplacianMatrix& laplacian, std::int64_t vertex);

enum class CofactorCheck {
  None,
  /// Also expand at a second vertex and throw std::logic_error on mismatch.
  CrossVertex,
};

/// Sum over v of the arborescences converging to v: N times the cofactor at 0.
TreeCount tau_directed(const GeneralCirculantInstance& instance,
                       CofactorCheck check = CofactorCheck::None);

/// Spanning trees of an undirected instance.
TreeCount tau_undirected(const GeneralCirculantInstance& instance);

/// Dispatches on instance direction.
TreeCount tau_matrix_tree(const GeneralCirculantInstance& instance);

/// Enclosure of prod_{k=1}^{N-1} lambda_k (directed) or that product over N
/// (undirected).
ComplexBall tau_eigenproduct(const GeneralCirculantInstance& instance, mpfr_prec_t prec);

/// tau_eigenproduct rounded to its certified integer.
CertifiedCount eigenproduct_count(const GeneralCirculantInstance& instance,
                                  const PrecisionBudget& budget = {});

}  // namespace circtree

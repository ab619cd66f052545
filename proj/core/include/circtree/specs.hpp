#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace circtree {

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest vertex count any family may describe.
inline constexpr std::int64_t kMaxVertices = std::int64_t{1} << 31;

/// The directed circulant graph on beta*n vertices generated by
/// {p, gamma_1*n + p, ..., gamma_{d-1}*n + p}.
struct DirectedCirculantSpec {
  std::int64_t beta = 1;
  std::int64_t n = 1;
  std::int64_t p = 1;
  std::vector<std::int64_t> gammas;  // nondecreasing, each in [1, beta]

  /// Number of generators d (counted with repetition, loops included).
  int generator_count() const { return 1 + static_cast<int>(gammas.size()); }
  std::int64_t vertex_count() const { return beta * n; }

  /// Throws InvalidSpec.
  void validate() const;
  std::string describe() const;
};

enum class PowerVariant { PowerN, PowerNMinus1 };

std::string to_string(PowerVariant variant);

/// The n-th (or (n-1)-th) power graph of the (beta*n)-cycle.
struct CyclePowerSpec {
  std::int64_t beta = 2;
  std::int64_t n = 1;
  PowerVariant variant = PowerVariant::PowerN;

  std::int64_t power() const { return variant == PowerVariant::PowerN ? n : n - 1; }
  std::int64_t vertex_count() const { return beta * n; }

  void validate() const;
  std::string describe() const;
};

/// A concrete circulant (di)graph: vertex count plus generator residues with
/// edge multiplicities.
///
/// Directed instances keep residues in [0, N); residue 0 is a loop.
/// Undirected instances keep residues in [1, N/2]; a generator g joins v to
/// v+g and v-g with the stored multiplicity, counted once when g = N/2.
class GeneralCirculantInstance {
 public:
  using Multiplicities = std::map<std::int64_t, std::int64_t>;

  static GeneralCirculantInstance directed(std::int64_t vertices,
                                           const std::vector<std::int64_t>& generators);
  static GeneralCirculantInstance undirected(std::int64_t vertices,
                                             const Multiplicities& generators);

  std::int64_t vertex_count() const { return vertices_; }
  bool is_directed() const { return directed_; }
  const Multiplicities& generators() const { return generators_; }

  std::int64_t multiplicity(std::int64_t residue) const;
  std::int64_t loop_multiplicity() const { return directed_ ? multiplicity(0) : 0; }
  /// Row sum of the adjacency matrix, loops included.
  std::int64_t degree() const;

 private:
  GeneralCirculantInstance(std::int64_t vertices, bool directed, Multiplicities generators)
      : vertices_(vertices), directed_(directed), generators_(std::move(generators)) {}

  std::int64_t vertices_;
  bool directed_;
  Multiplicities generators_;
};

/// Dense integer Laplacian D - A.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(std::int64_t size);

  std::int64_t size() const { return size_; }
  std::int64_t& at(std::int64_t row, std::int64_t col) { return entries_[index(row, col)]; }
  std::int64_t at(std::int64_t row, std::int64_t col) const { return entries_[index(row, col)]; }

  std::int64_t trace() const;
  bool rows_sum_to_zero() const;

  friend bool operator==(const LaplacianMatrix&, const LaplacianMatrix&) = default;

 private:
  std::size_t index(std::int64_t row, std::int64_t col) const {
    return static_cast<std::size_t>(row * size_ + col);
  }

  std::int64_t size_;
  std::vector<std::int64_t> entries_;
};

}  // namespace circtree

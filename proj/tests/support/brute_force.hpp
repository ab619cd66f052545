#pragma once

// Test-only oracles that share no code with the library paths they check.

#include <cstdint>
#include <numeric>
#include <vector>

namespace circtree::testing {

using IntMatrix = std::vector<std::vector<long long>>;

/// Laplace expansion along the first row.
inline long long naive_determinant(const IntMatrix& m) {
  const std::size_t size = m.size();
  if (size == 0) {
    return 1;
  }
  if (size == 1) {
    return m[0][0];
  }
  long long det = 0;
  for (std::size_t col = 0; col < size; ++col) {
    IntMatrix minor;
    for (std::size_t i = 1; i < size; ++i) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < size; ++j) {
        if (j != col) {
          row.push_back(m[i][j]);
        }
      }
      minor.push_back(std::move(row));
    }
    const long long term = m[0][col] * naive_determinant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

struct Edge {
  std::int64_t from;
  std::int64_t to;
};

/// Every directed edge v -> v + g (mod N), one per generator occurrence.
inline std::vector<Edge> circulant_edges(std::int64_t vertices,
                                         const std::vector<std::int64_t>& generators) {
  std::vector<Edge> edges;
  for (std::int64_t v = 0; v < vertices; ++v) {
    for (auto g : generators) {
      edges.push_back({v, ((v + g) % vertices + vertices) % vertices});
    }
  }
  return edges;
}

/// Out-degree Laplacian built edge by edge: f(x) -> sum_{x->y} (f(x) - f(y)).
inline IntMatrix laplacian_from_edges(std::int64_t vertices, const std::vector<Edge>& edges) {
  IntMatrix L(static_cast<std::size_t>(vertices),
              std::vector<long long>(static_cast<std::size_t>(vertices), 0));
  for (const auto& e : edges) {
    L[e.from][e.from] += 1;
    L[e.from][e.to] -= 1;
  }
  return L;
}

/// Counts spanning arborescences converging to `root` by trying every choice
/// of one outgoing edge per non-root vertex.
inline long long count_converging_arborescences(std::int64_t vertices,
                                                const std::vector<Edge>& edges,
                                                std::int64_t root) {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(vertices));
  for (const auto& e : edges) {
    out[e.from].push_back(e.to);
  }
  std::vector<std::int64_t> choice(static_cast<std::size_t>(vertices), -1);
  long long total = 0;
  auto reaches_root = [&] {
    for (std::int64_t v = 0; v < vertices; ++v) {
      std::int64_t cur = v;
      for (std::int64_t steps = 0; steps <= vertices && cur != root; ++steps) {
        cur = choice[cur];
      }
      if (cur != root) {
        return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::int64_t v) -> void {
    if (v == vertices) {
      total += reaches_root() ? 1 : 0;
      return;
    }
    if (v == root) {
      self(self, v + 1);
      return;
    }
    for (auto target : out[v]) {
      choice[v] = target;
      self(self, v + 1);
    }
  };
  recurse(recurse, 0);
  return total;
}

/// gcd of all generator residues together with N.
inline std::int64_t generator_gcd(std::int64_t vertices, const std::vector<std::int64_t>& gens) {
  std::int64_t g = vertices;
  for (auto r : gens) {
    g = std::gcd(g, ((r % vertices) + vertices) % vertices);
  }
  return g;
}

}  // namespace circtree::testing

#pragma once

#include "treecount/exact.hpp"
#include "treecount/graph.hpp"

#include <cstdint>
#include <vector>

namespace treecount {

// Brute-force counters used as ground truth. Both are independent of the
// determinant machinery.

inline constexpr std::uint64_t default_oracle_limit = 10'000'000;

/// True iff `subset` (edges of g) has n-1 edges and connects every vertex.
/// Throws EdgeNotInGraph for an edge g lacks.
bool is_spanning_tree(const Graph& g, const std::vector<Edge>& subset);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Counts the (n-1)-edge subsets that are spanning trees. Throws TooLarge when
/// C(|E|, n-1) exceeds `limit`.
Count tau_subsets(const Graph& g, std::uint64_t limit = default_oracle_limit);

/// Loopless multigraph: symmetric multiplicity matrix, zero diagonal.
class Multigraph {
public:
  explicit Multigraph(int n);
  explicit Multigraph(const Graph& g);

  int num_vertices() const noexcept { return n_; }
  int multiplicity(Vertex a, Vertex b) const { return mult_[slot(a, b)]; }
  void add_edge(Vertex a, Vertex b, int count = 1);
  void remove_all(Vertex a, Vertex b);

  /// Merges b into a, dropping edges between them; b's label disappears and
  /// higher labels shift down by one.
  Multigraph contract(Vertex a, Vertex b) const;

  bool is_connected() const;

private:
  std::size_t slot(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b - 1);
  }

  int n_;
  std::vector<int> mult_;
};

/// Deletion-contraction: tau(G) = tau(G - e) + k tau(G / e) where k is the
/// multiplicity of the first edge e in lexicographic order.
Count tau_delcon(const Multigraph& mg);

} // namespace treecount

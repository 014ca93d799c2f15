#pragma once

#include "treecount/exact.hpp"
#include "treecount/graph.hpp"

#include <optional>
#include <vector>

namespace treecount {

/// Split of the vertex set into two independent sets. Order matters: the S
/// matrix rows follow `rows`.
struct Bipartition {
  std::vector<Vertex> rows;     // R
  std::vector<Vertex> columns;  // C
};

/// Throws NotBipartition unless `bp` partitions V(g) into two nonempty
/// independent sets.
void validate_bipartition(const Graph& g, const Bipartition& bp);

/// Two-colours `g`. The smallest vertex of every component lands in R, so
/// isolated vertices are rows. Both sides listed in ascending order. Empty if
/// `g` has an odd cycle or every vertex would end up in R.
std::optional<Bipartition> find_bipartition(const Graph& g);

/// Indicator vector of `vertices` in R^n.
IntVector indicator(int n, const std::vector<Vertex>& vertices);

/// Matrix-tree theorem: (-1)^(row+col) det(L with row `row` and column `col`
/// deleted). Any choice of row and column gives the same count.
Count tau_reduced(const Graph& g, Vertex row, Vertex col);

/// det(L + u v^T) / (sum u)(sum v). Throws ZeroVectorSum if either sum is 0.
Count tau_rank_one(const Graph& g, const IntVector& u, const IntVector& v);

/// det(L + J) / n^2, the all-ones special case of tau_rank_one.
Count tau_temperley(const Graph& g);

/// S(r,r) = deg(r); S(r,r') = sum over c in N(r) \ N(r') of 1/deg(c).
RatMatrix s_matrix(const Graph& g, const Bipartition& bp);

/// prod_{c in C} deg(c) * det(S) / (|R| |C|).
Count tau_bipartite_schur(const Graph& g, const Bipartition& bp);

/// Default counter (Temperley).
Count tau(const Graph& g);

} // namespace treecount

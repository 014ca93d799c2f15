#pragma once

#include "treecount/exact.hpp"

#include <span>
#include <utility>
#include <vector>

namespace treecount {

// Vertices are 1-based on every public surface: a graph on n vertices uses
// labels 1..n.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n. Immutable once built.
///
/// Edges are stored normalized (u < v) in ascending lexicographic order, so
/// two graphs built from the same edge set compare equal regardless of the
/// input order.
class Graph {
public:
  /// Builds a graph from an edge list. Rejects loops, endpoints outside 1..n
  /// and repeated pairs ({i,j} and {j,i} count as the same pair).
  Graph(int n, std::span<const std::pair<int, int>> edge_list);
  Graph(int n, std::initializer_list<std::pair<int, int>> edge_list);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;

  int degree(Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // sorted, 0-based slot per vertex
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);

int degree(const Graph& g, Vertex v);
std::vector<Vertex> neighbors(const Graph& g, Vertex v);

/// n x n integer Laplacian: degrees on the diagonal, -1 for each edge.
IntMatrix laplacian(const Graph& g);

/// True iff every vertex is reachable from vertex 1.
bool is_connected(const Graph& g);

/// Relabels vertices: vertex v of `g` becomes `new_label[v-1]`.
/// `new_label` must be a permutation of 1..n.
Graph relabel(const Graph& g, std::span<const Vertex> new_label);

} // namespace treecount

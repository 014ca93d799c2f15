#include "treecount/graph.hpp"

#include "treecount/error.hpp"

#include <algorithm>
#include <string>

namespace treecount {

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list)
    : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 1) {
    throw Error(Errc::OutOfRange, "graph needs at least one vertex, got n=" + std::to_string(n));
  }
  edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(Errc::OutOfRange, "edge {" + std::to_string(a) + "," + std::to_string(b) +
                                        "} outside 1.." + std::to_string(n));
    }
    if (a == b) {
      throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(a));
    }
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(Errc::DuplicateEdge,
                "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} repeated");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edge_list)
    : Graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(Errc::OutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const auto& list = adjacency_[a - 1];
  return std::binary_search(list.begin(), list.end(), b);
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v - 1];
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
  return Graph(n, edge_list);
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

std::vector<Vertex> neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

IntMatrix laplacian(const Graph& g) {
  const Index n = g.num_vertices();
  IntMatrix l = IntMatrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const Index i = e.u - 1;
    const Index j = e.v - 1;
    l(i, j) = -1;
    l(j, i) = -1;
    l(i, i) += 1;
    l(j, j) += 1;
  }
  return l;
}

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph relabel(const Graph& g, std::span<const Vertex> new_label) {
  const int n = g.num_vertices();
  if (static_cast<int>(new_label.size()) != n) {
    throw Error(Errc::DimensionMismatch, "relabel needs one label per vertex");
  }
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (Vertex v : new_label) {
    if (v < 1 || v > n || used[v - 1]) {
      throw Error(Errc::OutOfRange, "relabel: labels must be a permutation of 1..n");
    }
    used[v - 1] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(new_label[e.u - 1], new_label[e.v - 1]);
  return Graph(n, edges);
}

} // namespace treecount

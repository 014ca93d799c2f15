#include "treecount/random_graph.hpp"

#include <algorithm>

namespace treecount {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

Graph random_bounded_graph(int n, int max_edges, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  }
  std::shuffle(all.begin(), all.end(), rng);
  const int cap = std::min<int>(max_edges, static_cast<int>(all.size()));
  std::uniform_int_distribution<int> count(0, cap);
  all.resize(static_cast<std::size_t>(count(rng)));
  return Graph(n, all);
}

} // namespace treecount

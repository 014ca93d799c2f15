#include "treecount/oracle.hpp"

#include "treecount/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace treecount {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

private:
  std::vector<int> parent_;
};

} // namespace

bool is_spanning_tree(const Graph& g, const std::vector<Edge>& subset) {
  for (const Edge& e : subset) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(Errc::EdgeNotInGraph,
                  "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
  const int n = g.num_vertices();
  if (static_cast<int>(subset.size()) != n - 1) return false;
  DisjointSets sets(n);
  int components = n;
  for (const Edge& e : subset) {
    if (sets.unite(e.u - 1, e.v - 1)) --components;
  }
  return components == 1;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * factor / i;
  }
  return result;
}

Count tau_subsets(const Graph& g, std::uint64_t limit) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int k = n - 1;
  const std::uint64_t subsets = binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k));
  if (subsets > limit) {
    throw Error(Errc::TooLarge, "C(" + std::to_string(m) + "," + std::to_string(k) + ") = " +
                                    std::to_string(subsets) + " subsets exceeds limit " +
                                    std::to_string(limit));
  }
  if (k == 0) return Count(1);
  if (m < k) return Count(0);

  const auto& edges = g.edges();
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  std::uint64_t trees = 0;
  while (true) {
    DisjointSets sets(n);
    int merged = 0;
    for (int idx : pick) {
      if (sets.unite(edges[idx].u - 1, edges[idx].v - 1)) ++merged;
    }
    if (merged == k) ++trees;

    int pos = k - 1;
    while (pos >= 0 && pick[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Count(ExactInt(trees));
}

Multigraph::Multigraph(int n) : n_(n), mult_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw Error(Errc::OutOfRange, "multigraph needs at least one vertex");
}

Multigraph::Multigraph(const Graph& g) : Multigraph(g.num_vertices()) {
  for (const Edge& e : g.edges()) add_edge(e.u, e.v);
}

void Multigraph::add_edge(Vertex a, Vertex b, int count) {
  if (a < 1 || a > n_ || b < 1 || b > n_) {
    throw Error(Errc::OutOfRange, "multigraph edge outside 1.." + std::to_string(n_));
  }
  if (a == b) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(a));
  mult_[slot(a, b)] += count;
  mult_[slot(b, a)] += count;
}

void Multigraph::remove_all(Vertex a, Vertex b) {
  mult_[slot(a, b)] = 0;
  mult_[slot(b, a)] = 0;
}

Multigraph Multigraph::contract(Vertex a, Vertex b) const {
  auto image = [&](Vertex x) {
    if (x == b) x = a;
    return x > b ? x - 1 : x;
  };
  Multigraph out(n_ - 1);
  for (Vertex x = 1; x <= n_; ++x) {
    for (Vertex y = x + 1; y <= n_; ++y) {
      const int k = multiplicity(x, y);
      if (k == 0) continue;
      const Vertex ix = image(x);
      const Vertex iy = image(y);
      if (ix != iy) out.add_edge(ix, iy, k);
    }
  }
  return out;
}

bool Multigraph::is_connected() const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 1; w <= n_; ++w) {
      if (!seen[w - 1] && multiplicity(v, w) > 0) {
        seen[w - 1] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

Count tau_delcon(const Multigraph& mg) {
  const int n = mg.num_vertices();
  if (n == 1) return Count(1);
  if (!mg.is_connected()) return Count(0);
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      const int k = mg.multiplicity(a, b);
      if (k == 0) continue;
      Multigraph deleted = mg;
      deleted.remove_all(a, b);
      const Count without = tau_delcon(deleted);
      const Count through = tau_delcon(mg.contract(a, b));
      return Count(without.value() + ExactInt(k) * through.value());
    }
  }
  return Count(0);  // unreachable: connected with n >= 2 has an edge
}

} // namespace treecount

#include "treecount/families.hpp"

#include "treecount/error.hpp"

#include <algorithm>
#include <numeric>

namespace treecount {

namespace {

ExactInt power(long base, long exponent) {
  return mp::pow(ExactInt(base), static_cast<unsigned>(exponent));
}

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(Errc::OutOfRange, std::string(what) + " must be >= 1");
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::InvalidPartition, "partition has no parts");
  if (parts_.back() < 1) throw Error(Errc::InvalidPartition, "parts must be positive");
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw Error(Errc::InvalidPartition, "parts must be weakly decreasing");
  }
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(largest()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++out[j];
  }
  return out;
}

MultipartiteSpec::MultipartiteSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error(Errc::InvalidMultipartite, "need at least one part");
  if (*std::min_element(sizes_.begin(), sizes_.end()) < 1) {
    throw Error(Errc::InvalidMultipartite, "part sizes must be positive");
  }
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

ThresholdSeq ThresholdSeq::parse(const std::string& bits) {
  std::vector<ThresholdStep> steps;
  steps.reserve(bits.size());
  for (char ch : bits) {
    switch (ch) {
      case 'd': steps.push_back(ThresholdStep::Dominating); break;
      case 'i': steps.push_back(ThresholdStep::Isolated); break;
      default:
        throw Error(Errc::ParseError,
                    std::string("threshold step '") + ch + "' is neither 'd' nor 'i'");
    }
  }
  return ThresholdSeq(std::move(steps));
}

int ThresholdSeq::num_dominating() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), ThresholdStep::Dominating));
}

std::string ThresholdSeq::str() const {
  std::string out;
  for (auto step : steps_) out += step == ThresholdStep::Dominating ? 'd' : 'i';
  return out;
}

Graph gen_complete(int n) {
  require_positive(n, "complete graph size");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph gen_complete_bipartite(int m, int n) {
  require_positive(m, "bipartite side m");
  require_positive(n, "bipartite side n");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) edges.emplace_back(i, m + j);
  }
  return Graph(m + n, edges);
}

Graph gen_complete_multipartite(const MultipartiteSpec& spec) {
  std::vector<int> part_of;
  for (int p = 0; p < spec.num_parts(); ++p) part_of.insert(part_of.end(), spec.sizes()[p], p);
  const int n = spec.num_vertices();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (part_of[i - 1] != part_of[j - 1]) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph gen_ferrers(const Partition& lambda) {
  const int m = lambda.num_parts();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= lambda.parts()[i - 1]; ++j) edges.emplace_back(i, m + j);
  }
  return Graph(m + lambda.largest(), edges);
}

Bipartition ferrers_bipartition(const Partition& lambda) {
  Bipartition bp;
  const int m = lambda.num_parts();
  for (int i = 1; i <= m; ++i) bp.rows.push_back(i);
  for (int j = 1; j <= lambda.largest(); ++j) bp.columns.push_back(m + j);
  return bp;
}

Graph gen_threshold(const ThresholdSeq& seq) {
  const auto& steps = seq.steps();
  const int n = seq.num_vertices();

  // Addition order: slot 0 is the initial vertex, slot s is step s.
  std::vector<std::pair<int, int>> added_edges;
  for (int s = 1; s < n; ++s) {
    if (steps[s - 1] == ThresholdStep::Dominating) {
      for (int earlier = 0; earlier < s; ++earlier) added_edges.emplace_back(earlier, s);
    }
  }

  std::vector<Vertex> label(static_cast<std::size_t>(n));
  const int dominating = seq.num_dominating();
  int next_dominating = dominating;  // first added dominating vertex gets v_{t-1}
  int next_isolated = dominating + 2;
  label[0] = dominating + 1;
  for (int s = 1; s < n; ++s) {
    label[s] = steps[s - 1] == ThresholdStep::Dominating ? next_dominating-- : next_isolated++;
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(added_edges.size());
  for (auto [a, b] : added_edges) edges.emplace_back(label[a], label[b]);
  return Graph(n, edges);
}

bool is_threshold_ordered(const Graph& g) {
  for (const Edge& e : g.edges()) {
    const Vertex k = e.u;
    const Vertex l = e.v;
    for (Vertex i = 1; i < k; ++i) {
      if (!g.has_edge(i, l)) return false;
    }
    for (Vertex j = 1; j < l; ++j) {
      if (j != k && !g.has_edge(k, j)) return false;
    }
  }
  return true;
}

int threshold_t(const Graph& g) {
  if (!is_threshold_ordered(g)) {
    throw Error(Errc::NotThresholdOrdered, "labeling violates the threshold ordering");
  }
  int t = 1;
  for (Vertex candidate = 2; candidate <= g.num_vertices(); ++candidate) {
    bool adjacent_to_all = true;
    for (Vertex i = 1; i < candidate && adjacent_to_all; ++i) {
      adjacent_to_all = g.has_edge(i, candidate);
    }
    if (adjacent_to_all) t = candidate;
  }
  return t;
}

Count count_complete(int n) {
  require_positive(n, "complete graph size");
  if (n == 1) return Count(1);
  return Count(power(n, n - 2));
}

Count count_complete_bipartite(int m, int n) {
  require_positive(m, "bipartite side m");
  require_positive(n, "bipartite side n");
  return Count(power(m, n - 1) * power(n, m - 1));
}

Count count_complete_multipartite(const MultipartiteSpec& spec) {
  const int n = spec.num_vertices();
  if (spec.num_parts() == 1) return Count(n == 1 ? 1 : 0);
  ExactInt product = power(n, spec.num_parts() - 2);
  for (int size : spec.sizes()) product *= power(n - size, size - 1);
  return Count(std::move(product));
}

Count count_ferrers(const Partition& lambda) {
  const auto& rows = lambda.parts();
  const std::vector<int> cols = lambda.conjugate();

  ExactInt from_second = 1;
  for (std::size_t i = 1; i < rows.size(); ++i) from_second *= rows[i];
  for (std::size_t j = 1; j < cols.size(); ++j) from_second *= cols[j];

  ExactInt all_degrees = 1;
  for (int d : rows) all_degrees *= d;
  for (int d : cols) all_degrees *= d;
  const ExactInt sides = ExactInt(rows.size()) * ExactInt(cols.size());
  if (all_degrees != from_second * sides) {
    throw InvariantViolation("Ferrers product forms disagree for a partition with " +
                             std::to_string(rows.size()) + " parts");
  }
  return Count(std::move(from_second));
}

Count count_threshold_ordered(const Graph& g) {
  const int n = g.num_vertices();
  const int t = threshold_t(g);
  if (!is_connected(g)) return Count(0);
  ExactInt product = 1;
  for (Vertex i = 2; i <= t - 1; ++i) product *= g.degree(i) + 1;
  for (Vertex i = t + 1; i <= n; ++i) product *= g.degree(i);
  return Count(std::move(product));
}

Count count_threshold(const ThresholdSeq& seq) { return count_threshold_ordered(gen_threshold(seq)); }

} // namespace treecount

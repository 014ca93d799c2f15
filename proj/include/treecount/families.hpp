#pragma once

#include "treecount/exact.hpp"
#include "treecount/graph.hpp"
#include "treecount/kirchhoff.hpp"

#include <string>
#include <vector>

namespace treecount {

/// Weakly decreasing list of positive integers.
class Partition {
public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
  int largest() const noexcept { return parts_.front(); }

  /// conjugate()[j-1] = number of parts >= j.
  std::vector<int> conjugate() const;

private:
  std::vector<int> parts_;
};

/// Part sizes n_1..n_k of a complete multipartite graph, all >= 1.
class MultipartiteSpec {
public:
  explicit MultipartiteSpec(std::vector<int> sizes);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int num_parts() const noexcept { return static_cast<int>(sizes_.size()); }
  int num_vertices() const noexcept { return total_; }

private:
  std::vector<int> sizes_;
  int total_;
};

enum class ThresholdStep { Dominating, Isolated };

/// Creation sequence of a threshold graph: one initial vertex, then one
/// vertex per step, each adjacent to everything before it (Dominating) or to
/// nothing (Isolated).
class ThresholdSeq {
public:
  ThresholdSeq() = default;
  explicit ThresholdSeq(std::vector<ThresholdStep> steps) : steps_(std::move(steps)) {}

  /// Parses 'd' / 'i' characters in addition order.
  static ThresholdSeq parse(const std::string& bits);

  const std::vector<ThresholdStep>& steps() const noexcept { return steps_; }
  int num_vertices() const noexcept { return static_cast<int>(steps_.size()) + 1; }
  int num_dominating() const;
  std::string str() const;

private:
  std::vector<ThresholdStep> steps_;
};

Graph gen_complete(int n);

/// Vertices 1..m form one side, m+1..m+n the other.
Graph gen_complete_bipartite(int m, int n);

/// Vertices grouped consecutively by part.
Graph gen_complete_multipartite(const MultipartiteSpec& spec);

/// Rows r_1..r_m are vertices 1..m, columns c_1..c_n are m+1..m+n; r_i ~ c_j
/// iff j <= lambda_i.
Graph gen_ferrers(const Partition& lambda);

/// Natural row/column split of gen_ferrers(lambda), rows in order r_1..r_m.
Bipartition ferrers_bipartition(const Partition& lambda);

/// Builds the threshold graph and labels it in threshold order: dominating
/// vertices first (last added is v_1), then the initial vertex v_t, then the
/// isolated-step vertices in the order they were added.
Graph gen_threshold(const ThresholdSeq& seq);

/// True iff the labeling satisfies the threshold ordering property:
/// {v_k, v_l} in E with k < l implies {v_i, v_l} in E for i < k and
/// {v_k, v_j} in E for j < l.
bool is_threshold_ordered(const Graph& g);

/// Largest t with v_t adjacent to every v_i, i < t. Throws NotThresholdOrdered
/// if the labeling is not a threshold order.
int threshold_t(const Graph& g);

Count count_complete(int n);
Count count_complete_bipartite(int m, int n);
Count count_complete_multipartite(const MultipartiteSpec& spec);

/// prod_{i>=2} lambda_i * prod_{j>=2} lambda'_j. Also evaluates
/// prod deg(v) / (mn) and throws InvariantViolation if the two disagree.
Count count_ferrers(const Partition& lambda);

/// prod_{i=2}^{t-1} (deg(v_i)+1) * prod_{i=t+1}^{n} deg(v_i) on a connected
/// threshold-ordered graph; 0 when the graph is disconnected.
Count count_threshold_ordered(const Graph& g);
Count count_threshold(const ThresholdSeq& seq);

} // namespace treecount

#pragma once

#include "treecount/graph.hpp"

#include <random>

namespace treecount {

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// G(n, p) resampled until connected.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

/// Uniformly random graph on n vertices with at most `max_edges` edges
/// (possibly disconnected).
Graph random_bounded_graph(int n, int max_edges, std::mt19937_64& rng);

} // namespace treecount

#pragma once

#include "treecount/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace treecount {

// Edge-list documents: a header line "n m", then m lines "i j" with 1-based
// endpoints. Lines starting with '#' are comments; blank lines are ignored.

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

/// Header then one edge per line, ascending, LF endings, single spaces.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

std::string to_edge_list(const Graph& g);

} // namespace treecount

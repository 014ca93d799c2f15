#include "treecount/edge_list.hpp"

#include "treecount/error.hpp"

#include <fstream>
#include <sstream>

namespace treecount {

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads exactly two nonnegative integers from `line`, nothing else.
std::pair<long, long> two_ints(const std::string& line, int line_no) {
  std::istringstream in(line);
  long a = 0;
  long b = 0;
  std::string rest;
  if (!(in >> a >> b) || (in >> rest)) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": expected two integers, got '" + line + "'");
  }
  return {a, b};
}

} // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long n = 0;
  long m = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || line.front() == '#') continue;
    auto [a, b] = two_ints(line, line_no);
    if (!have_header) {
      if (a < 1 || b < 0) {
        throw Error(Errc::ParseError, "header needs n >= 1 and m >= 0, got '" + line + "'");
      }
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": endpoint outside 1.." +
                                        std::to_string(n));
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!have_header) throw Error(Errc::ParseError, "missing 'n m' header");
  if (static_cast<long>(edges.size()) != m) {
    throw Error(Errc::ParseError, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path.string() + "'");
  write_edge_list(out, g);
  if (!out) throw Error(Errc::IoError, "write to '" + path.string() + "' failed");
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

} // namespace treecount

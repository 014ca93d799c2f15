#include "treecount/kirchhoff.hpp"

#include "treecount/error.hpp"
#include "treecount/linalg.hpp"

#include <algorithm>
#include <deque>

namespace treecount {

namespace {

Count exact_quotient(const ExactInt& numerator, const ExactInt& denominator, const char* method) {
  ExactInt quotient;
  ExactInt remainder;
  mp::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw InvariantViolation(std::string(method) + ": " + numerator.str() +
                             " is not divisible by " + denominator.str());
  }
  return Count(std::move(quotient));
}

} // namespace

void validate_bipartition(const Graph& g, const Bipartition& bp) {
  const int n = g.num_vertices();
  if (bp.rows.empty() || bp.columns.empty()) {
    throw Error(Errc::NotBipartition, "both sides must be nonempty");
  }
  // 0 unassigned, 1 row, 2 column
  std::vector<char> side(static_cast<std::size_t>(n), 0);
  auto assign = [&](const std::vector<Vertex>& part, char tag) {
    for (Vertex v : part) {
      if (v < 1 || v > n) {
        throw Error(Errc::NotBipartition, "vertex " + std::to_string(v) + " not in graph");
      }
      if (side[v - 1] != 0) {
        throw Error(Errc::NotBipartition, "vertex " + std::to_string(v) + " listed twice");
      }
      side[v - 1] = tag;
    }
  };
  assign(bp.rows, 1);
  assign(bp.columns, 2);
  if (std::find(side.begin(), side.end(), 0) != side.end()) {
    throw Error(Errc::NotBipartition, "some vertex is on neither side");
  }
  for (const Edge& e : g.edges()) {
    if (side[e.u - 1] == side[e.v - 1]) {
      throw Error(Errc::NotBipartition, "edge {" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + "} lies inside one side");
    }
  }
}

std::optional<Bipartition> find_bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (Vertex start = 1; start <= n; ++start) {
    if (colour[start - 1] >= 0) continue;
    colour[start - 1] = 0;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w - 1] < 0) {
          colour[w - 1] = 1 - colour[v - 1];
          queue.push_back(w);
        } else if (colour[w - 1] == colour[v - 1]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bp;
  for (Vertex v = 1; v <= n; ++v) (colour[v - 1] == 0 ? bp.rows : bp.columns).push_back(v);
  if (bp.columns.empty()) return std::nullopt;
  return bp;
}

IntVector indicator(int n, const std::vector<Vertex>& vertices) {
  IntVector out = IntVector::Zero(n);
  for (Vertex v : vertices) {
    if (v < 1 || v > n) {
      throw Error(Errc::OutOfRange, "vertex " + std::to_string(v) + " outside 1.." +
                                        std::to_string(n));
    }
    out(v - 1) = 1;
  }
  return out;
}

Count tau_reduced(const Graph& g, Vertex row, Vertex col) {
  const int n = g.num_vertices();
  if (row < 1 || row > n || col < 1 || col > n) {
    throw Error(Errc::OutOfRange, "reduced Laplacian index (" + std::to_string(row) + "," +
                                      std::to_string(col) + ") outside 1.." + std::to_string(n));
  }
  const ExactInt minor = det_int(minor_matrix(laplacian(g), row, col));
  return Count((row + col) % 2 == 0 ? minor : ExactInt(-minor));
}

Count tau_rank_one(const Graph& g, const IntVector& u, const IntVector& v) {
  const ExactInt sum_u = u.sum();
  const ExactInt sum_v = v.sum();
  if (sum_u == 0 || sum_v == 0) {
    throw Error(Errc::ZeroVectorSum, "rank-one update needs vectors with nonzero sums");
  }
  return exact_quotient(det_perturbed(laplacian(g), u, v), sum_u * sum_v, "tau_rank_one");
}

Count tau_temperley(const Graph& g) {
  const IntMatrix l = laplacian(g);
  const ExactInt n = g.num_vertices();
  return exact_quotient(det_int(l + ones_like(l)), n * n, "tau_temperley");
}

RatMatrix s_matrix(const Graph& g, const Bipartition& bp) {
  validate_bipartition(g, bp);
  for (Vertex c : bp.columns) {
    if (g.degree(c) == 0) {
      throw Error(Errc::IsolatedColumnVertex,
                  "column vertex " + std::to_string(c) + " has no neighbours");
    }
  }
  const Index m = static_cast<Index>(bp.rows.size());
  RatMatrix s = RatMatrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    const auto& ni = g.neighbors(bp.rows[i]);
    s(i, i) = g.degree(bp.rows[i]);
    for (Index j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto& nj = g.neighbors(bp.rows[j]);
      ExactRat sum = 0;
      for (Vertex c : ni) {
        if (!std::binary_search(nj.begin(), nj.end(), c)) sum += ExactRat(1, g.degree(c));
      }
      s(i, j) = sum;
    }
  }
  return s;
}

Count tau_bipartite_schur(const Graph& g, const Bipartition& bp) {
  const RatMatrix s = s_matrix(g, bp);
  ExactInt column_degrees = 1;
  for (Vertex c : bp.columns) column_degrees *= g.degree(c);
  const ExactInt scaled = to_integer(ExactRat(column_degrees) * det_rat(s));
  const ExactInt sides = ExactInt(bp.rows.size()) * ExactInt(bp.columns.size());
  return exact_quotient(scaled, sides, "tau_bipartite_schur");
}

Count tau(const Graph& g) { return tau_temperley(g); }

} // namespace treecount

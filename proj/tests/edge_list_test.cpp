#include "treecount/edge_list.hpp"
#include "treecount/error.hpp"
#include "treecount/family_spec.hpp"
#include "treecount/random_graph.hpp"

#include <doctest.h>

#include <sstream>

using namespace treecount;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

Errc parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error for: " << text);
  return Errc::IoError;
}

} // namespace

TEST_CASE("read_edge_list") {
  const Graph g = parse("# worked example\n4 5\n1 2\n2 3\n\n3 4\n# diagonal\n1 4\n1 3\n");
  CHECK(g == Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}}));
  CHECK(parse("1 0\n") == Graph(1, {}));
  CHECK(parse("2 1\r\n1 2\r\n") == Graph(2, {{1, 2}}));
}

TEST_CASE("read_edge_list rejects malformed documents") {
  CHECK(parse_error("") == Errc::ParseError);
  CHECK(parse_error("3 2\n1 2\n") == Errc::ParseError);
  CHECK(parse_error("3 1\n1 2\n2 3\n") == Errc::ParseError);
  CHECK(parse_error("3 1\n1 4\n") == Errc::ParseError);
  CHECK(parse_error("3 1\n2 2\n") == Errc::ParseError);
  CHECK(parse_error("3 2\n1 2\n2 1\n") == Errc::ParseError);
  CHECK(parse_error("3 1\n1 2 3\n") == Errc::ParseError);
  CHECK(parse_error("3 1\n1 x\n") == Errc::ParseError);
  CHECK(parse_error("0 0\n") == Errc::ParseError);
  CHECK_THROWS_AS(read_edge_list(std::filesystem::path("/nonexistent/graph.edges")), Error);
}

TEST_CASE("write_edge_list is bit-exact") {
  CHECK(to_edge_list(gen_complete(3)) == "3 3\n1 2\n1 3\n2 3\n");
  CHECK(to_edge_list(Graph(1, {})) == "1 0\n");
  const std::string ferrers = to_edge_list(FamilySpec::parse("ferrers:4,4,3,2,1").graph());
  CHECK(ferrers.substr(0, ferrers.find('\n')) == "9 14");
}

TEST_CASE("write then read reproduces the graph") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(1 + trial % 10, 0.4, rng);
    CHECK(parse(to_edge_list(g)) == g);
  }
}

TEST_CASE("FamilySpec parsing") {
  CHECK(FamilySpec::parse("complete:5").graph() == gen_complete(5));
  CHECK(FamilySpec::parse("bipartite:3,4").graph() == gen_complete_bipartite(3, 4));
  CHECK(FamilySpec::parse("multipartite:2,3,4").graph().num_edges() == 26);
  CHECK(FamilySpec::parse("ferrers:4,4,3,2,1").formula() == Count(576));
  CHECK(FamilySpec::parse("threshold:ididd").formula() == Count(180));
  CHECK(FamilySpec::parse("threshold:").graph().num_vertices() == 1);
  CHECK(FamilySpec::parse("multipartite:2,3,4").str() == "multipartite:2,3,4");

  for (const char* bad : {"complete", "complete:", "complete:0", "complete:5x", "bipartite:3",
                          "bipartite:3,0", "multipartite:", "multipartite:1,,2", "ferrers:1,2",
                          "threshold:idq", "wheel:5", "complete:-3"}) {
    try {
      FamilySpec::parse(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}

TEST_CASE("FamilySpec::sized") {
  CHECK(FamilySpec::sized("complete", 4).str() == "complete:4");
  CHECK(FamilySpec::sized("bipartite", 3).str() == "bipartite:3,3");
  CHECK(FamilySpec::sized("multipartite", 3).str() == "multipartite:3,2,1");
  CHECK(FamilySpec::sized("ferrers", 3).str() == "ferrers:3,3,3");
  CHECK(FamilySpec::sized("threshold", 1).str() == "threshold:");
  CHECK(FamilySpec::sized("threshold", 6).str() == "threshold:didid");
  CHECK(FamilySpec::sized("threshold", 5).str() == "threshold:idid");
  CHECK_THROWS_AS(FamilySpec::sized("wheel", 3), Error);
}

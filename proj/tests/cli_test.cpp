#include "treecount/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace treecount;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Value of the "tau: " line in a plain count report.
std::string tau_line(const std::string& report) {
  const auto pos = report.find("tau: ");
  REQUIRE(pos != std::string::npos);
  return report.substr(pos + 5, report.find('\n', pos) - pos - 5);
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "treecount_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

} // namespace

TEST_CASE("count with a family spec") {
  const Result r = run({"count", "--family", "complete:5", "--method", "formula"});
  CHECK(r.code == cli::kOk);
  CHECK(tau_line(r.out) == "125");

  const Result t = run({"count", "--family", "threshold:ididd", "--method", "reduced"});
  CHECK(t.code == cli::kOk);
  CHECK(tau_line(t.out) == "180");
}

TEST_CASE("count with a file") {
  const auto path = scratch("fig1.edges");
  std::ofstream(path) << "# worked example\n4 5\n1 2\n2 3\n3 4\n1 4\n1 3\n";
  const Result r = run({"count", "--file", path.string(), "--method", "temperley"});
  CHECK(r.code == cli::kOk);
  CHECK(tau_line(r.out) == "8");
}

TEST_CASE("JSON tau equals the plain-text tau") {
  for (const char* family : {"complete:25", "ferrers:4,4,3,2,1", "multipartite:2,3,4"}) {
    const Result text = run({"count", "--family", family});
    const Result json = run({"count", "--family", family, "--json"});
    REQUIRE(json.code == cli::kOk);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["tau"].is_string());
    CHECK(doc["tau"].get<std::string>() == tau_line(text.out));
    CHECK(doc["method"] == "temperley");
  }
  // 25^23 does not fit in 64 bits.
  CHECK(tau_line(run({"count", "--family", "complete:25"}).out) ==
        "142108547152020037174224853515625");
}

TEST_CASE("exit codes under injected failures") {
  const auto bad = scratch("bad.edges");
  std::ofstream(bad) << "3 2\n1 2\n";
  CHECK(run({"count", "--file", bad.string()}).code == cli::kParseError);
  CHECK(run({"count", "--file", scratch("missing.edges").string()}).code == cli::kParseError);
  CHECK(run({"count", "--family", "complete:x"}).code == cli::kParseError);
  CHECK(run({"count", "--family", "complete:3", "--method", "bogus"}).code == cli::kParseError);
  CHECK(run({"count"}).code == cli::kParseError);
  CHECK(run({"frobnicate"}).code == cli::kParseError);

  const Result schur = run({"count", "--family", "complete:3", "--method", "schur"});
  CHECK(schur.code == cli::kMethodUnavailable);
  CHECK(schur.err.find("MethodUnavailable") != std::string::npos);

  const auto fig = scratch("fig1_formula.edges");
  std::ofstream(fig) << "4 5\n1 2\n2 3\n3 4\n1 4\n1 3\n";
  CHECK(run({"count", "--file", fig.string(), "--method", "formula"}).code ==
        cli::kMethodUnavailable);

  CHECK(run({"count", "--family", "complete:12", "--method", "oracle"}).code ==
        cli::kOracleTooLarge);
  CHECK(run({"count", "--family", "complete:12", "--method", "delcon"}).code ==
        cli::kOracleTooLarge);

  CHECK(run({"generate", "--family", "complete:3", "-o", "/nonexistent/dir/out.edges"}).code ==
        cli::kIoError);
}

TEST_CASE("oracle limit can be overridden from the environment") {
  ::setenv("TREECOUNT_ORACLE_LIMIT", "100", 1);
  CHECK(run({"count", "--family", "complete:5", "--method", "oracle"}).code ==
        cli::kOracleTooLarge);
  ::setenv("TREECOUNT_ORACLE_LIMIT", "junk", 1);
  CHECK(run({"count", "--family", "complete:5", "--method", "oracle"}).code == cli::kParseError);
  ::unsetenv("TREECOUNT_ORACLE_LIMIT");
  CHECK(run({"count", "--family", "complete:5", "--method", "oracle"}).code == cli::kOk);
}

TEST_CASE("generate writes the edge-list document") {
  const Result ferrers = run({"generate", "--family", "ferrers:4,4,3,2,1"});
  CHECK(ferrers.code == cli::kOk);
  CHECK(ferrers.out.rfind("9 14\n", 0) == 0);
  CHECK(run({"generate", "--family", "complete:3"}).out == "3 3\n1 2\n1 3\n2 3\n");
  CHECK(run({"generate", "--family", "multipartite:2,3,4"}).out.rfind("9 26\n", 0) == 0);

  const auto path = scratch("f.edges");
  CHECK(run({"generate", "--family", "ferrers:4,4,3,2,1", "-o", path.string()}).code == cli::kOk);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "9 14");
}

TEST_CASE("generate then count round-trips for every family and method") {
  const std::vector<std::string> families = {"complete:5", "bipartite:2,3", "multipartite:1,2,2",
                                             "ferrers:3,2,2,1", "threshold:idid"};
  for (const auto& family : families) {
    const auto path = scratch("roundtrip.edges");
    REQUIRE(run({"generate", "--family", family, "-o", path.string()}).code == cli::kOk);
    for (const char* method : {"reduced", "rankone", "temperley", "schur", "oracle", "delcon"}) {
      const Result from_family = run({"count", "--family", family, "--method", method});
      const Result from_file = run({"count", "--file", path.string(), "--method", method});
      CHECK(from_family.code == from_file.code);
      if (from_family.code == cli::kOk) CHECK(tau_line(from_family.out) == tau_line(from_file.out));
    }
  }
}

TEST_CASE("verify") {
  const Result ferrers = run({"verify", "--family", "ferrers:4,4,3,2,1"});
  CHECK(ferrers.code == cli::kOk);
  CHECK(ferrers.out.find("all 7 methods agree: tau = 576") != std::string::npos);

  const Result edge = run({"verify", "--family", "bipartite:1,1"});
  CHECK(edge.code == cli::kOk);
  CHECK(edge.out.find("tau = 1\n") != std::string::npos);

  const Result random = run({"verify", "--random", "n=6", "trials=50", "--seed", "7"});
  CHECK(random.code == cli::kOk);
  CHECK(random.out.find("50/50 agreements") != std::string::npos);

  const Result subset = run({"verify", "--family", "complete:6", "--methods", "reduced,formula"});
  CHECK(subset.code == cli::kOk);
  CHECK(subset.out.find("all 2 methods agree: tau = 1296") != std::string::npos);

  CHECK(run({"verify", "--random", "n=6", "--seed", "7"}).code == cli::kParseError);
  CHECK(run({"verify", "--random", "n=6", "tries=5"}).code == cli::kParseError);
}

TEST_CASE("bench emits one CSV row per size and method") {
  const Result r =
      run({"bench", "--family", "complete", "--sizes", "4..9", "--methods", "temperley,reduced,formula"});
  CHECK(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,size,method,tau,elapsed_ms");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("complete,", 0) == 0);
  }
  CHECK(rows == 18);
  CHECK(r.out.find("complete,9,formula,4782969,") != std::string::npos);

  const Result one = run({"bench", "--family", "complete", "--sizes", "1..1"});
  CHECK(one.code == cli::kOk);
  CHECK(one.out.find("complete,1,temperley,1,") != std::string::npos);

  const Result ferrers = run({"bench", "--family", "ferrers", "--sizes", "2..6",
                              "--methods", "formula,schur,temperley"});
  CHECK(ferrers.code == cli::kOk);

  CHECK(run({"bench", "--family", "complete", "--sizes", "5..4"}).code == cli::kParseError);
  CHECK(run({"bench", "--family", "complete", "--sizes", "4"}).code == cli::kParseError);
  CHECK(run({"bench", "--family", "complete", "--sizes", "2..3", "--methods", "schur"}).code ==
        cli::kMethodUnavailable);
}

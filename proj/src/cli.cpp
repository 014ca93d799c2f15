#include "treecount/cli.hpp"

#include "treecount/edge_list.hpp"
#include "treecount/error.hpp"
#include "treecount/family_spec.hpp"
#include "treecount/kirchhoff.hpp"
#include "treecount/oracle.hpp"
#include "treecount/random_graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace treecount::cli {

namespace {

const std::vector<std::string> kCountMethods = {"reduced", "rankone", "temperley", "schur",
                                                "formula", "oracle",  "delcon"};

class MethodUnavailable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Mismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Input {
  Graph graph;
  std::optional<FamilySpec> family;
  std::string label;
};

std::uint64_t oracle_limit() {
  const char* env = std::getenv("TREECOUNT_ORACLE_LIMIT");
  if (env == nullptr || *env == '\0') return default_oracle_limit;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, std::string("TREECOUNT_ORACLE_LIMIT='") + env +
                                      "' is not a nonnegative integer");
  }
}

Input load_input(const std::string& family, const std::string& file) {
  if (family.empty() == file.empty()) {
    throw Error(Errc::ParseError, "give exactly one of --family or --file");
  }
  if (!family.empty()) {
    FamilySpec spec = FamilySpec::parse(family);
    Graph g = spec.graph();
    return Input{std::move(g), spec, spec.str()};
  }
  return Input{read_edge_list(std::filesystem::path(file)), std::nullopt, file};
}

void check_oracle_size(const Graph& g, std::uint64_t limit) {
  const auto subsets = binomial(static_cast<std::uint64_t>(g.num_edges()),
                                static_cast<std::uint64_t>(g.num_vertices() - 1));
  if (subsets > limit) {
    throw Error(Errc::TooLarge, std::to_string(subsets) + " edge subsets exceed oracle limit " +
                                    std::to_string(limit));
  }
}

Count evaluate(const std::string& method, const Input& in, std::uint64_t limit) {
  const Graph& g = in.graph;
  if (method == "reduced") return tau_reduced(g, 1, 1);
  if (method == "rankone") {
    // u = all ones, v = indicator of vertex 1: sums n and 1.
    return tau_rank_one(g, IntVector::Ones(g.num_vertices()), indicator(g.num_vertices(), {1}));
  }
  if (method == "temperley") return tau_temperley(g);
  if (method == "schur") {
    std::optional<Bipartition> bp = in.family ? in.family->natural_bipartition() : std::nullopt;
    if (!bp) bp = find_bipartition(g);
    if (!bp) throw MethodUnavailable("schur needs a bipartite graph with both sides nonempty");
    try {
      return tau_bipartite_schur(g, *bp);
    } catch (const Error& e) {
      if (e.code() == Errc::IsolatedColumnVertex) throw MethodUnavailable(e.what());
      throw;
    }
  }
  if (method == "formula") {
    if (!in.family) throw MethodUnavailable("formula needs a --family input");
    return in.family->formula();
  }
  if (method == "oracle") return tau_subsets(g, limit);
  if (method == "delcon") {
    check_oracle_size(g, limit);
    return tau_delcon(Multigraph(g));
  }
  throw Error(Errc::ParseError, "unknown method '" + method + "'");
}

struct Timed {
  Count tau;
  double elapsed_ms;
};

Timed timed_evaluate(const std::string& method, const Input& in, std::uint64_t limit) {
  const auto start = std::chrono::steady_clock::now();
  Count tau = evaluate(method, in, limit);
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return {std::move(tau), elapsed.count()};
}

std::string format_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

std::vector<std::string> split_methods(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (std::find(kCountMethods.begin(), kCountMethods.end(), item) == kCountMethods.end()) {
      throw Error(Errc::ParseError, "unknown method '" + item + "'");
    }
    out.push_back(item);
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty method list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a_text = text.substr(0, dots);
    const std::string b_text = text.substr(dots + 2);
    const int a = std::stoi(a_text, &used_a);
    const int b = std::stoi(b_text, &used_b);
    if (used_a != a_text.size() || used_b != b_text.size() || a < 1 || b < a) {
      throw std::invalid_argument(text);
    }
    return {a, b};
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw Error(Errc::ParseError, "--sizes expects A..B with 1 <= A <= B, got '" + text + "'");
}

int cmd_count(const std::string& family, const std::string& file, const std::string& method,
              bool json, std::ostream& out) {
  if (std::find(kCountMethods.begin(), kCountMethods.end(), method) == kCountMethods.end()) {
    throw Error(Errc::ParseError, "unknown method '" + method + "'");
  }
  const Input in = load_input(family, file);
  const Timed result = timed_evaluate(method, in, oracle_limit());
  if (json) {
    nlohmann::json doc = {
        {"input", in.label},
        {"method", method},
        {"vertices", in.graph.num_vertices()},
        {"edges", in.graph.num_edges()},
        {"tau", result.tau.str()},
        {"elapsed_ms", result.elapsed_ms},
    };
    out << doc.dump() << '\n';
  } else {
    out << "input: " << in.label << '\n'
        << "method: " << method << '\n'
        << "vertices: " << in.graph.num_vertices() << '\n'
        << "edges: " << in.graph.num_edges() << '\n'
        << "tau: " << result.tau << '\n'
        << "elapsed_ms: " << format_ms(result.elapsed_ms) << '\n';
  }
  return kOk;
}

// Runs each method, printing one row per method. Returns the methods that ran
// with their counts; unavailable methods are reported and skipped.
std::vector<std::pair<std::string, Count>> run_methods(const Input& in,
                                                       const std::vector<std::string>& methods,
                                                       std::uint64_t limit, std::ostream& out) {
  std::vector<std::pair<std::string, Count>> results;
  for (const auto& method : methods) {
    try {
      Count tau = evaluate(method, in, limit);
      out << "  " << std::left << std::setw(10) << method << tau << '\n';
      results.emplace_back(method, std::move(tau));
    } catch (const MethodUnavailable&) {
      out << "  " << std::left << std::setw(10) << method << "n/a\n";
    } catch (const Error& e) {
      if (e.code() != Errc::TooLarge) throw;
      out << "  " << std::left << std::setw(10) << method << "skipped (oracle limit)\n";
    }
  }
  return results;
}

std::string disagreement(const std::vector<std::pair<std::string, Count>>& results) {
  std::string text;
  for (const auto& [method, tau] : results) {
    if (!text.empty()) text += ", ";
    text += method + "=" + tau.str();
  }
  return text;
}

bool all_equal(const std::vector<std::pair<std::string, Count>>& results) {
  for (const auto& r : results) {
    if (!(r.second == results.front().second)) return false;
  }
  return true;
}

int cmd_verify(const std::string& family, const std::string& file,
               const std::string& methods_text, const std::vector<std::string>& random,
               std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const std::uint64_t limit = oracle_limit();
  std::vector<std::string> methods =
      methods_text.empty() ? kCountMethods : split_methods(methods_text);

  if (random.empty()) {
    const Input in = load_input(family, file);
    out << "verify " << in.label << " (n=" << in.graph.num_vertices()
        << ", edges=" << in.graph.num_edges() << ")\n";
    const auto results = run_methods(in, methods, limit, out);
    if (!all_equal(results)) {
      err << "Mismatch: " << disagreement(results) << '\n';
      return kMismatch;
    }
    out << "all " << results.size() << " methods agree";
    if (!results.empty()) out << ": tau = " << results.front().second;
    out << '\n';
    return kOk;
  }

  if (!family.empty() || !file.empty()) {
    throw Error(Errc::ParseError, "--random cannot be combined with --family or --file");
  }
  std::map<std::string, int> params;
  for (const auto& token : random) {
    const std::size_t eq = token.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument(token);
      std::size_t used = 0;
      const std::string value = token.substr(eq + 1);
      params[token.substr(0, eq)] = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "--random expects n=K trials=T, got '" + token + "'");
    }
  }
  if (params.size() != 2 || !params.contains("n") || !params.contains("trials") ||
      params["n"] < 1 || params["trials"] < 1) {
    throw Error(Errc::ParseError, "--random expects n=K trials=T with K, T >= 1");
  }
  std::erase(methods, std::string("formula"));

  const int n = params["n"];
  const int trials = params["trials"];
  std::mt19937_64 rng(seed);
  int agreements = 0;
  for (int trial = 1; trial <= trials; ++trial) {
    Graph g = random_connected_graph(n, 0.5, rng);
    const Input in{g, std::nullopt, "random"};
    out << "trial " << trial << " (n=" << n << ", edges=" << g.num_edges() << ")\n";
    const auto results = run_methods(in, methods, limit, out);
    if (all_equal(results)) {
      ++agreements;
    } else {
      err << "Mismatch in trial " << trial << " (seed " << seed << "): " << disagreement(results)
          << '\n'
          << to_edge_list(g);
    }
  }
  out << agreements << "/" << trials << " agreements (seed " << seed << ")\n";
  return agreements == trials ? kOk : kMismatch;
}

int cmd_generate(const std::string& family, const std::string& output, std::ostream& out) {
  const Graph g = FamilySpec::parse(family).graph();
  if (output.empty() || output == "-") {
    write_edge_list(out, g);
  } else {
    write_edge_list(std::filesystem::path(output), g);
  }
  return kOk;
}

int cmd_bench(const std::string& family, const std::string& sizes_text,
              const std::string& methods_text, std::ostream& out, std::ostream& err) {
  const auto [first, last] = parse_range(sizes_text);
  const auto methods =
      split_methods(methods_text.empty() ? "temperley,reduced,formula" : methods_text);
  const std::uint64_t limit = oracle_limit();

  out << "family,size,method,tau,elapsed_ms\n";
  for (int size = first; size <= last; ++size) {
    const FamilySpec spec = FamilySpec::sized(family, size);
    const Input in{spec.graph(), spec, spec.str()};
    std::vector<std::pair<std::string, Timed>> rows;
    for (const auto& method : methods) rows.emplace_back(method, timed_evaluate(method, in, limit));
    for (const auto& row : rows) {
      if (!(row.second.tau == rows.front().second.tau)) {
        err << "Mismatch at " << spec.str() << ": " << rows.front().first << "="
            << rows.front().second.tau << ", " << row.first << "=" << row.second.tau << '\n';
        return kMismatch;
      }
    }
    for (const auto& [method, timed] : rows) {
      out << family << ',' << size << ',' << method << ',' << timed.tau << ','
          << format_ms(timed.elapsed_ms) << '\n';
    }
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spanning tree counting", "treecount"};
  app.require_subcommand(1);

  std::string family;
  std::string file;
  std::string method = "temperley";
  std::string methods;
  std::string output;
  std::string sizes;
  bool json = false;
  std::uint64_t seed = 1;
  std::vector<std::string> random;

  auto* count = app.add_subcommand("count", "Count spanning trees with one method");
  count->add_option("--family", family, "Family spec, e.g. complete:5 or ferrers:4,4,3,2,1");
  count->add_option("--file", file, "Edge-list file");
  count->add_option("--method", method,
                    "reduced, rankone, temperley, schur, formula, oracle or delcon");
  count->add_flag("--json", json, "Emit a JSON report");

  auto* verify = app.add_subcommand("verify", "Check that every applicable method agrees");
  verify->add_option("--family", family, "Family spec");
  verify->add_option("--file", file, "Edge-list file");
  verify->add_option("--methods", methods, "Comma-separated subset of methods");
  verify->add_option("--random", random, "Random corpus: n=K trials=T")->expected(2);
  verify->add_option("--seed", seed, "Seed for --random");

  auto* generate = app.add_subcommand("generate", "Write a family graph as an edge list");
  generate->add_option("--family", family, "Family spec")->required();
  generate->add_option("-o,--output", output, "Output path (default: standard output)");

  auto* bench = app.add_subcommand("bench", "Time methods across a family and size range");
  bench->add_option("--family", family,
                    "complete, bipartite, multipartite, ferrers or threshold")
      ->required();
  bench->add_option("--sizes", sizes, "Size range A..B")->required();
  bench->add_option("--methods", methods, "Comma-separated methods");

  std::vector<std::string> argv_storage{"treecount"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*count) return cmd_count(family, file, method, json, out);
    if (*verify) return cmd_verify(family, file, methods, random, seed, out, err);
    if (*generate) return cmd_generate(family, output, out);
    if (*bench) return cmd_bench(family, sizes, methods, out, err);
  } catch (const MethodUnavailable& e) {
    err << "MethodUnavailable: " << e.what() << '\n';
    return kMethodUnavailable;
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case Errc::TooLarge: return kOracleTooLarge;
      case Errc::IoError: return kIoError;
      default: return kParseError;
    }
  }
  return kParseError;
}

} // namespace treecount::cli

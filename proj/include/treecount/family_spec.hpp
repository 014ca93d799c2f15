#pragma once

#include "treecount/families.hpp"

#include <optional>
#include <string>
#include <variant>

namespace treecount {

struct CompleteSpec {
  int n;
};
struct BipartiteSpec {
  int m;
  int n;
};

/// One of the five generated families, parsed from
/// `complete:N`, `bipartite:M,N`, `multipartite:N1,N2,...`,
/// `ferrers:L1,L2,...` or `threshold:BITS`.
class FamilySpec {
public:
  using Variant =
      std::variant<CompleteSpec, BipartiteSpec, MultipartiteSpec, Partition, ThresholdSeq>;

  explicit FamilySpec(Variant v) : value_(std::move(v)) {}

  /// Throws Error(ParseError) on malformed input.
  static FamilySpec parse(const std::string& text);

  /// Bench sizing: family name plus size parameter. complete -> K_s,
  /// bipartite -> K_{s,s}, multipartite -> K_{1,2,...,s}, ferrers -> s^s
  /// (square), threshold -> alternating i/d sequence on s vertices ending in d.
  static FamilySpec sized(const std::string& family, int size);

  const Variant& value() const noexcept { return value_; }
  std::string family() const;
  std::string str() const;

  Graph graph() const;
  Count formula() const;

  /// Natural bipartition for bipartite and Ferrers inputs.
  std::optional<Bipartition> natural_bipartition() const;

private:
  Variant value_;
};

} // namespace treecount

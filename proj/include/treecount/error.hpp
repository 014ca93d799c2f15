#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treecount {

enum class Errc {
  LoopEdge,
  OutOfRange,
  DuplicateEdge,
  IndexOutOfRange,
  DimensionMismatch,
  SingularTrailingBlock,
  ZeroVectorSum,
  NotBipartition,
  IsolatedColumnVertex,
  NotThresholdOrdered,
  InvalidPartition,
  InvalidMultipartite,
  EdgeNotInGraph,
  TooLarge,
  ParseError,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

// Recoverable misuse of the library: bad input, invalid preconditions.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Violated arithmetic invariant (negative count, inexact division). Never
// reachable from valid input; indicates a bug.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace treecount

#include "treecount/error.hpp"
#include "treecount/exact.hpp"

#include <ostream>

namespace treecount {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularTrailingBlock: return "SingularTrailingBlock";
    case Errc::ZeroVectorSum: return "ZeroVectorSum";
    case Errc::NotBipartition: return "NotBipartition";
    case Errc::IsolatedColumnVertex: return "IsolatedColumnVertex";
    case Errc::NotThresholdOrdered: return "NotThresholdOrdered";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::InvalidMultipartite: return "InvalidMultipartite";
    case Errc::EdgeNotInGraph: return "EdgeNotInGraph";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Count::Count(ExactInt value) : value_(std::move(value)) {
  if (value_ < 0) {
    throw InvariantViolation("negative spanning tree count " + value_.str());
  }
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.value(); }

} // namespace treecount

#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>

namespace treecount {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the scalars compose cleanly with
// Eigen's own expression machinery.
using ExactInt = mp::number<mp::gmp_int, mp::et_off>;
using ExactRat = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<ExactInt>;
using RatMatrix = Matrix<ExactRat>;
using IntVector = Vector<ExactInt>;
using RatVector = Vector<ExactRat>;

using Index = Eigen::Index;

inline std::string to_string(const ExactInt& value) { return value.str(); }
inline std::string to_string(const ExactRat& value) { return value.str(); }

// Number of spanning trees. Always a nonnegative integer.
class Count {
public:
  Count() = default;
  explicit Count(ExactInt value);
  explicit Count(long value) : Count(ExactInt(value)) {}

  const ExactInt& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
  friend bool operator<(const Count& a, const Count& b) { return a.value_ < b.value_; }

private:
  ExactInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const Count& c);

} // namespace treecount

#pragma once

#include "treecount/error.hpp"
#include "treecount/exact.hpp"

#include <string>

namespace treecount {

// Exact dense linear algebra over ExactInt / ExactRat.
//
// Row and column indices passed to minor_matrix are 1-based, matching vertex
// labels of the Laplacian they usually slice. Block splits are given by the
// leading block size k.

/// Copy of `m` with row `row` and column `col` (both 1-based) removed.
template <typename Derived>
Matrix<typename Derived::Scalar> minor_matrix(const Eigen::MatrixBase<Derived>& m, Index row,
                                              Index col) {
  const Index n = m.rows();
  if (m.cols() != n) {
    throw Error(Errc::DimensionMismatch, "minor_matrix needs a square matrix");
  }
  if (row < 1 || row > n || col < 1 || col > n) {
    throw Error(Errc::IndexOutOfRange, "minor (" + std::to_string(row) + "," +
                                           std::to_string(col) + ") of a " + std::to_string(n) +
                                           "x" + std::to_string(n) + " matrix");
  }
  Matrix<typename Derived::Scalar> out(n - 1, n - 1);
  for (Index i = 0, oi = 0; i < n; ++i) {
    if (i == row - 1) continue;
    for (Index j = 0, oj = 0; j < n; ++j) {
      if (j == col - 1) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

/// M + u v^T.
template <typename DerivedM, typename DerivedU, typename DerivedV>
Matrix<typename DerivedM::Scalar> add_outer_product(const Eigen::MatrixBase<DerivedM>& m,
                                                    const Eigen::MatrixBase<DerivedU>& u,
                                                    const Eigen::MatrixBase<DerivedV>& v) {
  if (m.rows() != m.cols() || u.size() != m.rows() || v.size() != m.rows()) {
    throw Error(Errc::DimensionMismatch, "add_outer_product: " + std::to_string(m.rows()) + "x" +
                                             std::to_string(m.cols()) + " with vectors of length " +
                                             std::to_string(u.size()) + ", " +
                                             std::to_string(v.size()));
  }
  return m + u * v.transpose();
}

template <typename Derived>
auto ones_like(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return Matrix<Scalar>::Constant(m.rows(), m.cols(), Scalar(1));
}

/// Determinant by fraction-free Bareiss elimination. Every intermediate value
/// is an integer; each division is checked to be exact. The 0x0 determinant
/// is 1.
ExactInt det_int(const IntMatrix& m);

/// Determinant by Gaussian elimination over the rationals.
ExactRat det_rat(const RatMatrix& m);

/// det(M + u v^T), equal to det_int(add_outer_product(M, u, v)).
ExactInt det_perturbed(const IntMatrix& m, const IntVector& u, const IntVector& v);

/// Transpose of the cofactor matrix: adj(M)(i,j) = (-1)^(i+j) det(M with row
/// j and column i deleted). Computed by n^2 cofactor determinants.
IntMatrix adjugate(const IntMatrix& m);

/// Inverse over the rationals. Throws SingularTrailingBlock if m is singular.
RatMatrix inverse(const RatMatrix& m);

/// M/D = A - B D^{-1} C, where A is the leading k x k block and D the
/// trailing (n-k) x (n-k) block.
RatMatrix schur_complement(const IntMatrix& m, Index k);

/// det(M) computed as det(D) * det(M/D).
ExactInt det_via_schur(const IntMatrix& m, Index k);

/// Exact conversion of a rational known to be integral.
ExactInt to_integer(const ExactRat& q);

} // namespace treecount

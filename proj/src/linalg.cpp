#include "treecount/linalg.hpp"

#include <utility>

namespace treecount {

namespace {

void require_square(Index rows, Index cols, const char* what) {
  if (rows != cols) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " needs a square matrix, got " +
                                             std::to_string(rows) + "x" + std::to_string(cols));
  }
}

// First row at or below `from` with a nonzero entry in column `col`, or -1.
template <typename Scalar>
Index find_pivot(const Matrix<Scalar>& a, Index col, Index from) {
  for (Index i = from; i < a.rows(); ++i) {
    if (a(i, col) != 0) return i;
  }
  return -1;
}

} // namespace

ExactInt det_int(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "det_int");
  const Index n = m.rows();
  if (n == 0) return ExactInt(1);

  IntMatrix a = m;
  ExactInt previous_pivot = 1;
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    const Index p = find_pivot(a, k, k);
    if (p < 0) return ExactInt(0);
    if (p != k) {
      a.row(p).swap(a.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        ExactInt numerator = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        ExactInt quotient;
        ExactInt remainder;
        mp::divide_qr(numerator, previous_pivot, quotient, remainder);
        if (remainder != 0) {
          throw InvariantViolation("Bareiss step " + std::to_string(k) +
                                   " produced an inexact division");
        }
        a(i, j) = std::move(quotient);
      }
      a(i, k) = 0;
    }
    previous_pivot = a(k, k);
  }
  ExactInt det = a(n - 1, n - 1);
  return negate ? ExactInt(-det) : det;
}

ExactRat det_rat(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "det_rat");
  const Index n = m.rows();
  RatMatrix a = m;
  ExactRat det = 1;
  for (Index k = 0; k < n; ++k) {
    const Index p = find_pivot(a, k, k);
    if (p < 0) return ExactRat(0);
    if (p != k) {
      a.row(p).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const ExactRat factor = a(i, k) / a(k, k);
      for (Index j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

ExactInt det_perturbed(const IntMatrix& m, const IntVector& u, const IntVector& v) {
  return det_int(add_outer_product(m, u, v));
}

IntMatrix adjugate(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "adjugate");
  const Index n = m.rows();
  if (n == 0) {
    throw Error(Errc::DimensionMismatch, "adjugate of a 0x0 matrix");
  }
  IntMatrix adj(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      ExactInt cofactor = det_int(minor_matrix(m, j + 1, i + 1));
      adj(i, j) = ((i + j) % 2 == 0) ? cofactor : ExactInt(-cofactor);
    }
  }
  return adj;
}

RatMatrix inverse(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "inverse");
  const Index n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    const Index p = find_pivot(a, k, k);
    if (p < 0) throw Error(Errc::SingularTrailingBlock, "matrix is singular");
    if (p != k) {
      a.row(p).swap(a.row(k));
      inv.row(p).swap(inv.row(k));
    }
    const ExactRat pivot = a(k, k);
    a.row(k) /= pivot;
    inv.row(k) /= pivot;
    for (Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const ExactRat factor = a(i, k);
      a.row(i) -= factor * a.row(k);
      inv.row(i) -= factor * inv.row(k);
    }
  }
  return inv;
}

RatMatrix schur_complement(const IntMatrix& m, Index k) {
  require_square(m.rows(), m.cols(), "schur_complement");
  const Index n = m.rows();
  if (k < 0 || k > n) {
    throw Error(Errc::IndexOutOfRange, "leading block size " + std::to_string(k) +
                                           " for a " + std::to_string(n) + "x" +
                                           std::to_string(n) + " matrix");
  }
  const Index rest = n - k;
  RatMatrix a = m.topLeftCorner(k, k).cast<ExactRat>();
  if (rest == 0) return a;

  const IntMatrix d = m.bottomRightCorner(rest, rest);
  if (det_int(d) == 0) {
    throw Error(Errc::SingularTrailingBlock, "trailing " + std::to_string(rest) + "x" +
                                                 std::to_string(rest) + " block is singular");
  }
  const RatMatrix b = m.topRightCorner(k, rest).cast<ExactRat>();
  const RatMatrix c = m.bottomLeftCorner(rest, k).cast<ExactRat>();
  const RatMatrix d_inv_c = inverse(d.cast<ExactRat>()) * c;
  return a - b * d_inv_c;
}

ExactInt det_via_schur(const IntMatrix& m, Index k) {
  const RatMatrix s = schur_complement(m, k);
  const Index rest = m.rows() - k;
  const ExactInt det_d = det_int(m.bottomRightCorner(rest, rest));
  return to_integer(ExactRat(det_d) * det_rat(s));
}

ExactInt to_integer(const ExactRat& q) {
  if (mp::denominator(q) != 1) {
    throw InvariantViolation("expected an integer, got " + q.str());
  }
  return ExactInt(mp::numerator(q));
}

} // namespace treecount

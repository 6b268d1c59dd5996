#pragma once

#include <cassert>
#include <cstdint>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "fusscat/checked_int.hpp"
#include "fusscat/integer.hpp"

namespace fusscat {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using SmallMatrix = Matrix<std::int64_t>;

/// Binomial coefficient with binomial(m, k) = 0 whenever k < 0, m < 0 or k > m.
/// The zero-for-negative-top convention is what the staircase path-counting
/// determinant needs; the generalized falling-factorial one is wrong there.
Integer binomial(std::int64_t m, std::int64_t k);

/// Fuss-Catalan number C_p(n) = binomial(np, p) / ((n-1)p + 1). The division
/// is checked to be exact. Throws ValidationError unless p >= 1 and n >= 1.
Integer fuss_catalan(std::int64_t p, std::int64_t n);

struct EchelonShape {
  Eigen::Index rank = 0;
  bool odd_row_swaps = false;
};

/// Fraction-free (Bareiss) elimination to row echelon form, in place.
/// Columns without a pivot are skipped, so any shape and rank is accepted.
/// Every division is exact: each entry after step k is a (k+1)-minor of the
/// input.
template <typename Scalar>
EchelonShape bareiss_echelon(Matrix<Scalar>& m) {
  EchelonShape shape;
  Scalar previous_pivot(1);
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      m.row(pivot).swap(m.row(row));
      shape.odd_row_swaps = !shape.odd_row_swaps;
    }
    const Scalar p = m(row, col);
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      const Scalar lead = m(i, col);
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        Scalar numerator = p * m(i, j) - lead * m(row, j);
        m(i, j) = numerator / previous_pivot;
        assert(m(i, j) * previous_pivot == numerator);
      }
      m(i, col) = Scalar(0);
    }
    previous_pivot = p;
    ++row;
  }
  shape.rank = row;
  return shape;
}

template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  assert(a.rows() == a.cols());
  if (a.rows() == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  const EchelonShape shape = bareiss_echelon(m);
  if (shape.rank < m.rows()) return Scalar(0);
  Scalar det = m(m.rows() - 1, m.cols() - 1);
  return shape.odd_row_swaps ? Scalar(0) - det : det;
}

template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& a) {
  Matrix<typename Derived::Scalar> m = a;
  return bareiss_echelon(m).rank;
}

/// Exact determinant. Throws ValidationError for non-square input.
Integer det_exact(const IntMatrix& m);

Eigen::Index rank_exact(const IntMatrix& m);

/// Rank of a machine-integer matrix. Runs elimination in checked 64-bit
/// arithmetic and redoes it over Integer if any intermediate overflows.
Eigen::Index rank_exact(const SmallMatrix& m);

IntMatrix to_int_matrix(const SmallMatrix& m);

/// Entrywise equality; Eigen's operator== does not instantiate for Integer.
bool same_entries(const IntMatrix& a, const IntMatrix& b);

}  // namespace fusscat

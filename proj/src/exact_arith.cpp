#include "fusscat/exact_arith.hpp"

#include <stdexcept>

#include "fusscat/errors.hpp"

namespace fusscat {

Integer binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || k > m) return Integer(0);
  k = std::min(k, m - k);
  Integer result(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;  // exact: product of i consecutive integers over i!
  }
  return result;
}

Integer fuss_catalan(std::int64_t p, std::int64_t n) {
  if (p < 1 || n < 1) throw ValidationError("fuss_catalan requires p >= 1 and n >= 1");
  const Integer numerator = binomial(n * p, p);
  const Integer denominator((n - 1) * p + 1);
  Integer quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("fuss_catalan: inexact division for p=" + std::to_string(p) +
                           ", n=" + std::to_string(n));
  }
  return quotient;
}

Integer det_exact(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ValidationError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " matrix");
  }
  return bareiss_determinant(m);
}

Eigen::Index rank_exact(const IntMatrix& m) { return bareiss_rank(m); }

IntMatrix to_int_matrix(const SmallMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Integer(m(i, j));
  return out;
}

bool same_entries(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

Eigen::Index rank_exact(const SmallMatrix& m) {
  try {
    Matrix<detail::CheckedInt64> checked = m.cast<detail::CheckedInt64>();
    return bareiss_echelon(checked).rank;
  } catch (const detail::Int64Overflow&) {
    return rank_exact(to_int_matrix(m));
  }
}

}  // namespace fusscat

#include "gitstab/matrix.hpp"

namespace gitstab {

RationalMatrix exact_inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i) {
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational p = a(col, col);
    a.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational factor = a(i, col);
      a.row(i) -= factor * a.row(col);
      inv.row(i) -= factor * inv.row(col);
    }
  }
  return inv;
}

RationalMatrix identity_matrix(Eigen::Index size) {
  RationalMatrix m = RationalMatrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix permutation_matrix(const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, perm[k]) = 1;
  return m;
}

RationalMatrix point_to_last_frame(const std::vector<Integer>& p) {
  const auto size = static_cast<Eigen::Index>(p.size());
  Eigen::Index pivot = -1;
  for (Eigen::Index k = size - 1; k >= 0; --k) {
    if (p[k] != 0) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) throw std::invalid_argument("the zero vector is not a projective point");
  RationalMatrix m = identity_matrix(size);
  for (Eigen::Index k = 0; k < size; ++k) m(size - 1, k) = Rational(p[k]);
  if (pivot != size - 1) {
    m.row(pivot).setZero();
    m(pivot, size - 1) = 1;
  }
  return m;
}

}  // namespace gitstab

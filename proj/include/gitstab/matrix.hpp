#pragma once

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gitstab/rational.hpp"

namespace gitstab {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntegerMatrix = Matrix<Integer>;

namespace detail {

// Row-wise denominator clearing; preserves rank and the sign of the
// determinant up to a positive factor.
template <typename Derived>
IntegerMatrix to_integer_rows(const Eigen::MatrixBase<Derived>& m, Integer* scale = nullptr) {
  using Scalar = typename Derived::Scalar;
  IntegerMatrix out(m.rows(), m.cols());
  if (scale) *scale = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      Integer l(1);
      for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
      for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = num(m(i, j)) * (l / den(m(i, j)));
      if (scale) *scale *= l;
    } else {
      for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Integer(m(i, j));
    }
  }
  return out;
}

// Bareiss elimination in place. Returns the rank; when `det` is non-null and
// the matrix is square, stores the determinant.
inline Eigen::Index bareiss(IntegerMatrix& a, Integer* det = nullptr) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Integer prev(1);
  int swaps = 0;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
      ++swaps;
    }
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
      }
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  if (det) {
    if (rows != cols || rank < rows) {
      *det = 0;
    } else {
      *det = (swaps % 2 == 0) ? prev : Integer(-prev);
    }
  }
  return rank;
}

}  // namespace detail

/// Exact rank by fraction-free elimination. Accepts rational, big-integer or
/// built-in integer scalars.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  IntegerMatrix a = detail::to_integer_rows(m);
  return detail::bareiss(a);
}

template <typename Derived>
Rational exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  Integer scale;
  IntegerMatrix a = detail::to_integer_rows(m, &scale);
  Integer det;
  detail::bareiss(a, &det);
  return Rational(det, scale);
}

/// Gauss-Jordan inverse over Q. Throws std::domain_error for singular input.
RationalMatrix exact_inverse(const RationalMatrix& m);

RationalMatrix identity_matrix(Eigen::Index size);

/// Matrix of the coordinate permutation that renames variable perm[k] to k:
/// row k is the unit vector e_{perm[k]}.
RationalMatrix permutation_matrix(const std::vector<int>& perm);

/// Matrix whose last row is `p` and which is invertible; used to move the
/// point p to [0:...:0:1].
RationalMatrix point_to_last_frame(const std::vector<Integer>& p);

}  // namespace gitstab

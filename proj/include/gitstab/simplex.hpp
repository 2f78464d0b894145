#pragma once

// Dense two-phase primal simplex with Bland's rule. Meant for exact scalar
// types (Rational); with floating point it carries no tolerances.

#include <stdexcept>
#include <vector>

#include "gitstab/matrix.hpp"

namespace gitstab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vector<Scalar> x;
  Scalar objective{};
};

namespace detail {

template <typename Scalar>
class Tableau {
 public:
  // Columns: [structural (nvar) | artificial (m) | rhs].
  Tableau(const Matrix<Scalar>& a, const Vector<Scalar>& b)
      : m_(a.rows()), nvar_(a.cols()), t_(Matrix<Scalar>::Zero(a.rows() + 1, a.cols() + a.rows() + 1)) {
    basis_.resize(m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const bool flip = b(i) < Scalar(0);
      for (Eigen::Index j = 0; j < nvar_; ++j) t_(i, j) = flip ? Scalar(-a(i, j)) : a(i, j);
      t_(i, nvar_ + i) = Scalar(1);
      t_(i, rhs_col()) = flip ? Scalar(-b(i)) : b(i);
      basis_[i] = nvar_ + i;
    }
  }

  Eigen::Index rhs_col() const { return nvar_ + m_; }

  // Phase one objective: minimise the sum of artificials.
  void load_phase_one() {
    t_.row(m_).setZero();
    for (Eigen::Index i = 0; i < m_; ++i) {
      for (Eigen::Index j = 0; j < nvar_; ++j) t_(m_, j) -= t_(i, j);
      t_(m_, rhs_col()) -= t_(i, rhs_col());
    }
  }

  void load_phase_two(const Vector<Scalar>& c) {
    t_.row(m_).setZero();
    for (Eigen::Index j = 0; j < nvar_; ++j) t_(m_, j) = c(j);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index bj = basis_[i];
      if (bj >= nvar_) continue;
      const Scalar cb = c(bj);
      if (cb == Scalar(0)) continue;
      for (Eigen::Index j = 0; j <= rhs_col(); ++j) t_(m_, j) -= cb * t_(i, j);
    }
  }

  // Returns false when the objective is unbounded below.
  bool optimise(Eigen::Index allowed_cols) {
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed_cols; ++j) {
        if (t_(m_, j) < Scalar(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best{};
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (!(t_(i, enter) > Scalar(0))) continue;
        Scalar ratio = t_(i, rhs_col()) / t_(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar p = t_(row, col);
    t_.row(row) /= p;
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == row || t_(i, col) == Scalar(0)) continue;
      const Scalar factor = t_(i, col);
      t_.row(i) -= factor * t_.row(row);
    }
    basis_[row] = col;
  }

  // Pivots basic artificials (all at level zero) out of the basis where a
  // structural column allows it; rows that cannot be pivoted are redundant.
  void expel_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < nvar_) continue;
      for (Eigen::Index j = 0; j < nvar_; ++j) {
        if (t_(i, j) != Scalar(0)) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Scalar objective_value() const { return -t_(m_, rhs_col()); }

  Vector<Scalar> solution() const {
    Vector<Scalar> x = Vector<Scalar>::Zero(nvar_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < nvar_) x(basis_[i]) = t_(i, rhs_col());
    }
    return x;
  }

  Eigen::Index nvar() const { return nvar_; }

 private:
  Eigen::Index m_;
  Eigen::Index nvar_;
  Matrix<Scalar> t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace detail

/// Solves  min c.x  subject to  A x = b, x >= 0.
template <typename Scalar>
LpResult<Scalar> solve_standard_form(const Matrix<Scalar>& a, const Vector<Scalar>& b,
                                     const Vector<Scalar>& c) {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    throw std::invalid_argument("LP dimensions do not match");
  }
  detail::Tableau<Scalar> tab(a, b);
  tab.load_phase_one();
  tab.optimise(tab.nvar() + a.rows());
  LpResult<Scalar> result;
  if (tab.objective_value() != Scalar(0)) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  tab.expel_artificials();
  tab.load_phase_two(c);
  if (!tab.optimise(tab.nvar())) {
    result.status = LpStatus::Unbounded;
    result.x = tab.solution();
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x = tab.solution();
  result.objective = c.dot(result.x);
  return result;
}

/// Feasibility of A x = b, x >= 0; returns a basic feasible point if any.
template <typename Scalar>
LpResult<Scalar> find_feasible_point(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  return solve_standard_form<Scalar>(a, b, Vector<Scalar>::Zero(a.cols()));
}

}  // namespace gitstab

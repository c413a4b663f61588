// Copyright 2026 The hankelgf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <utility>

#include <Eigen/Core>

#include "hankelgf/error.hpp"
#include "hankelgf/field.hpp"

namespace hankelgf {

using Matrix = Eigen::Matrix<Elt, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Elt, Eigen::Dynamic, 1>;

inline Matrix zeros(Eigen::Index rows, Eigen::Index cols) { return Matrix::Constant(rows, cols, Elt(0)); }

inline Matrix identity(Eigen::Index n) {
  Matrix m = zeros(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Elt(1);
  return m;
}

/// n x n matrix with ones on the antidiagonal.
inline Matrix exchange(Eigen::Index n) {
  Matrix m = zeros(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, n - 1 - i) = Elt(1);
  return m;
}

namespace detail {

struct Echelon {
  Eigen::Index rank = 0;
  Elt det{1};  // meaningful for square input only
};

// In-place forward elimination; pivot is the first nonzero entry at or below
// the current row.
inline Echelon forward_eliminate(const Field& f, Matrix& a) {
  Echelon e;
  Eigen::Index row = 0;
  bool negate = false;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == Elt(0)) ++pivot;
    if (pivot == a.rows()) {
      e.det = Elt(0);
      continue;
    }
    if (pivot != row) {
      a.row(pivot).swap(a.row(row));
      negate = !negate;
    }
    const Elt pinv = f.inv(a(row, col));
    e.det = f.mul(e.det, a(row, col));
    for (Eigen::Index r = row + 1; r < a.rows(); ++r) {
      if (a(r, col) == Elt(0)) continue;
      const Elt factor = f.mul(a(r, col), pinv);
      for (Eigen::Index c = col; c < a.cols(); ++c) {
        a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
      }
    }
    ++row;
  }
  e.rank = row;
  if (a.rows() == a.cols() && e.rank < a.rows()) e.det = Elt(0);
  if (negate) e.det = f.neg(e.det);
  return e;
}

}  // namespace detail

/// Exact rank over the field.
template <typename Derived>
std::size_t rank(const Field& f, const Eigen::MatrixBase<Derived>& m) {
  Matrix a = m;
  return static_cast<std::size_t>(detail::forward_eliminate(f, a).rank);
}

template <typename Derived>
Elt determinant(const Field& f, const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (m.rows() == 0) return Elt(1);
  Matrix a = m;
  return detail::forward_eliminate(f, a).det;
}

template <typename Derived>
bool is_nonsingular(const Field& f, const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && determinant(f, m) != Elt(0);
}

/// Matrix product with field arithmetic.
template <typename DerivedA, typename DerivedB>
Matrix multiply(const Field& f, const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  Matrix c = zeros(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Elt aik = a(i, k);
      if (aik == Elt(0)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  }
  return c;
}

/// Unique solution of a x = b for square nonsingular a; throws
/// SingularMatrix otherwise.
template <typename DerivedA, typename DerivedB>
Vector solve(const Field& f, const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != 1) {
    throw InvalidArgument("solve expects a square system with a single right-hand side");
  }
  Matrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  detail::forward_eliminate(f, aug);
  // Nonsingular exactly when every pivot sits on the diagonal.
  for (Eigen::Index i = 0; i < n; ++i) {
    if (aug(i, i) == Elt(0)) throw SingularMatrix("linear system matrix is singular");
  }
  Vector x(n);
  for (Eigen::Index i = n; i-- > 0;) {
    Elt acc = aug(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) acc = f.sub(acc, f.mul(aug(i, j), x(j)));
    x(i) = f.div(acc, aug(i, i));
  }
  return x;
}

}  // namespace hankelgf

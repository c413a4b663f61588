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
#include <cstdint>
#include <vector>

#include "hankelgf/field.hpp"
#include "hankelgf/linalg.hpp"
#include "hankelgf/poly.hpp"

namespace hankelgf {

/// n x n Hankel matrix (a_{i+j-1}) stored as its defining vector
/// (a_1, ..., a_{2n-1}).
class HankelMatrix {
 public:
  HankelMatrix(Field field, Vector a);

  const Field& field() const { return field_; }
  std::size_t order() const { return static_cast<std::size_t>((a_.size() + 1) / 2); }
  /// The defining vector; a()(0) is a_1.
  const Vector& a() const { return a_; }

  /// Entry at zero-based (i, j).
  Elt operator()(Eigen::Index i, Eigen::Index j) const { return a_(i + j); }

  Matrix dense() const;
  /// Leading principal d x d submatrix.
  Matrix leading(std::size_t d) const;

  friend bool operator==(const HankelMatrix& x, const HankelMatrix& y) {
    return x.field_ == y.field_ && x.a_ == y.a_;
  }

 private:
  Field field_;
  Vector a_;
};

/// n x n Toeplitz matrix (a_{n+i-j}) stored as (a_1, ..., a_{2n-1}).
class ToeplitzMatrix {
 public:
  ToeplitzMatrix(Field field, Vector a);

  const Field& field() const { return field_; }
  std::size_t order() const { return static_cast<std::size_t>((a_.size() + 1) / 2); }
  const Vector& a() const { return a_; }

  Elt operator()(Eigen::Index i, Eigen::Index j) const {
    return a_(static_cast<Eigen::Index>(order()) - 1 + i - j);
  }

  Matrix dense() const;

  friend bool operator==(const ToeplitzMatrix& x, const ToeplitzMatrix& y) {
    return x.field_ == y.field_ && x.a_ == y.a_;
  }

 private:
  Field field_;
  Vector a_;
};

/// A -> A E with E the exchange matrix. Reversing the columns of (a_{i+j-1})
/// gives (a_{n+i-j}), so the defining vector carries over unchanged.
ToeplitzMatrix hankel_to_toeplitz(const HankelMatrix& h);
HankelMatrix toeplitz_to_hankel(const ToeplitzMatrix& t);

std::size_t rank(const HankelMatrix& h);
std::size_t rank(const ToeplitzMatrix& t);
bool is_nonsingular(const HankelMatrix& h);

/// Largest d with a nonsingular leading principal d x d submatrix, 0 if none.
/// Each leading minor is evaluated independently.
std::size_t delta(const HankelMatrix& h);

/// n-th order Bezoutian of u and v from the closed-form coefficient sum
///   b_ij = sum_{s=1}^{min(i,j)} (v_{s-1} u_{i+j-s} - u_{s-1} v_{i+j-s}).
/// Requires deg u <= n and deg v <= n.
Matrix bezoutian(const Poly& u, const Poly& v, std::size_t n);

/// Number of n x n Hankel matrices over the field, q^{2n-1}; throws when that
/// exceeds 64 bits.
std::uint64_t hankel_count(const Field& field, std::size_t n);

/// The Hankel matrix at position index of the lexicographic order, where the
/// defining vector is read as base-q digits with a_1 most significant.
/// Any contiguous range of positions can be generated independently.
HankelMatrix hankel_at(const Field& field, std::size_t n, std::uint64_t index);

/// All q^{2n-1} Hankel matrices of order n in lexicographic order.
std::vector<HankelMatrix> hankel_matrices(const Field& field, std::size_t n);

}  // namespace hankelgf

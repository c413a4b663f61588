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

#include "hankelgf/structured.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hankelgf/error.hpp"

namespace hankelgf {

namespace {

void validate_vector(const Field& field, const Vector& a, const char* what) {
  if (a.size() < 1 || a.size() % 2 == 0) {
    throw InvalidArgument(std::string(what) + " needs a defining vector of odd length 2n-1");
  }
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!field.contains(a(i))) {
      throw InvalidArgument(std::string(what) + " entry " + std::to_string(a(i).code) +
                            " out of range for GF(" + std::to_string(field.order()) + ")");
    }
  }
}

}  // namespace

HankelMatrix::HankelMatrix(Field field, Vector a) : field_(std::move(field)), a_(std::move(a)) {
  validate_vector(field_, a_, "Hankel matrix");
}

Matrix HankelMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(order());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a_(i + j);
  return m;
}

Matrix HankelMatrix::leading(std::size_t d) const {
  if (d > order()) throw InvalidArgument("leading submatrix larger than the matrix");
  const auto k = static_cast<Eigen::Index>(d);
  Matrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = a_(i + j);
  return m;
}

ToeplitzMatrix::ToeplitzMatrix(Field field, Vector a) : field_(std::move(field)), a_(std::move(a)) {
  validate_vector(field_, a_, "Toeplitz matrix");
}

Matrix ToeplitzMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(order());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
  return m;
}

ToeplitzMatrix hankel_to_toeplitz(const HankelMatrix& h) { return ToeplitzMatrix(h.field(), h.a()); }

HankelMatrix toeplitz_to_hankel(const ToeplitzMatrix& t) { return HankelMatrix(t.field(), t.a()); }

std::size_t rank(const HankelMatrix& h) { return rank(h.field(), h.dense()); }

std::size_t rank(const ToeplitzMatrix& t) { return rank(t.field(), t.dense()); }

bool is_nonsingular(const HankelMatrix& h) { return is_nonsingular(h.field(), h.dense()); }

std::size_t delta(const HankelMatrix& h) {
  for (std::size_t d = h.order(); d >= 1; --d) {
    if (is_nonsingular(h.field(), h.leading(d))) return d;
  }
  return 0;
}

Matrix bezoutian(const Poly& u, const Poly& v, std::size_t n) {
  if (!(u.field() == v.field())) throw InvalidArgument("polynomials over different fields");
  if (u.degree() > n || v.degree() > n) {
    throw InvalidArgument("Bezoutian of order " + std::to_string(n) + " needs degrees at most " +
                          std::to_string(n));
  }
  const Field& f = u.field();
  const auto dim = static_cast<Eigen::Index>(n);
  Matrix b = zeros(dim, dim);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      Elt acc(0);
      for (std::size_t s = 1; s <= std::min(i, j); ++s) {
        acc = f.add(acc, f.sub(f.mul(v.coeff(s - 1), u.coeff(i + j - s)),
                               f.mul(u.coeff(s - 1), v.coeff(i + j - s))));
      }
      b(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) = acc;
    }
  }
  return b;
}

std::uint64_t hankel_count(const Field& field, std::size_t n) {
  if (n == 0) throw InvalidArgument("Hankel order must be at least 1");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < 2 * n - 1; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / field.order()) {
      throw InvalidArgument("Hankel enumeration size overflows 64 bits");
    }
    count *= field.order();
  }
  return count;
}

HankelMatrix hankel_at(const Field& field, std::size_t n, std::uint64_t index) {
  if (n == 0) throw InvalidArgument("Hankel order must be at least 1");
  const auto len = static_cast<Eigen::Index>(2 * n - 1);
  Vector a(len);
  for (Eigen::Index i = len; i-- > 0;) {
    a(i) = Elt(static_cast<std::uint32_t>(index % field.order()));
    index /= field.order();
  }
  return HankelMatrix(field, std::move(a));
}

std::vector<HankelMatrix> hankel_matrices(const Field& field, std::size_t n) {
  const std::uint64_t count = hankel_count(field, n);
  std::vector<HankelMatrix> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(hankel_at(field, n, i));
  return out;
}

}  // namespace hankelgf

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

// Independent brute-force oracles for the test suites. Nothing here calls
// the elimination, GCD, expansion or closed-form Bezoutian code it checks.

#pragma once

#include <cstddef>
#include <vector>

#include "hankelgf/field.hpp"
#include "hankelgf/linalg.hpp"
#include "hankelgf/poly.hpp"

namespace hankelgf::oracle {

/// Determinant by cofactor expansion along the first row.
inline Elt det_cofactor(const Field& f, const Matrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Elt(1);
  if (n == 1) return m(0, 0);
  Elt acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == Elt(0)) continue;
    Matrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Elt term = f.mul(m(0, j), det_cofactor(f, minor));
    if (j % 2 == 1) term = f.neg(term);
    acc = f.add(acc, term);
  }
  return acc;
}

namespace detail {

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<Eigen::Index>& cur,
                    std::vector<std::vector<Eigen::Index>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(static_cast<Eigen::Index>(i));
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Rank as the size of the largest nonvanishing minor.
inline std::size_t rank_by_minors(const Field& f, const Matrix& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  for (std::size_t d = std::min(rows, cols); d >= 1; --d) {
    std::vector<std::vector<Eigen::Index>> rs, cs;
    std::vector<Eigen::Index> cur;
    detail::subsets(rows, d, 0, cur, rs);
    detail::subsets(cols, d, 0, cur, cs);
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Matrix sub(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(r[i], c[j]);
        if (det_cofactor(f, sub) != Elt(0)) return d;
      }
    }
  }
  return 0;
}

/// delta from cofactor determinants of the leading principal submatrices.
inline std::size_t delta_by_cofactors(const Field& f, const Matrix& m) {
  for (Eigen::Index d = m.rows(); d >= 1; --d) {
    if (det_cofactor(f, m.topLeftCorner(d, d)) != Elt(0)) return static_cast<std::size_t>(d);
  }
  return 0;
}

/// Naive matrix product.
inline Matrix product(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix c = zeros(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
  return c;
}

/// True when some monic polynomial of degree >= 1 divides both u and v
/// (neither zero), by trial over all candidates.
inline bool share_factor_brute(const Poly& u, const Poly& v) {
  const Field& f = u.field();
  const std::size_t top = std::min(*u.degree(), *v.degree());
  for (std::size_t d = 1; d <= top; ++d) {
    for (const Poly& h : monic_polys(f, d)) {
      if (divrem(u, h).remainder.is_zero() && divrem(v, h).remainder.is_zero()) return true;
    }
  }
  return false;
}

/// Expansion of v/u at infinity from the geometric series: with
/// u(X) = X^n (1 - w(1/X)), v/u = X^{-n} v(X) sum_j w(1/X)^j. Series are in
/// Y = 1/X, truncated after Y^terms.
inline std::vector<Elt> expand_geometric(const Poly& u, const Poly& v, std::size_t terms) {
  const Field& f = u.field();
  const std::size_t n = *u.degree();
  const std::size_t len = terms + 1;
  // w(Y) = -sum_{j<n} u_j Y^{n-j}
  std::vector<Elt> w(len, Elt(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (n - j < len) w[n - j] = f.neg(u.coeff(j));
  }
  // X^{-n} v(X) = sum_i v_i Y^{n-i}
  std::vector<Elt> head(len, Elt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (n - i < len) head[n - i] = v.coeff(i);
  }
  auto mul = [&](const std::vector<Elt>& a, const std::vector<Elt>& b) {
    std::vector<Elt> c(len, Elt(0));
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; i + j < len; ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    return c;
  };
  // sum_{j=0}^{terms} w^j; w has no constant term so higher powers vanish.
  std::vector<Elt> geo(len, Elt(0)), wp(len, Elt(0));
  wp[0] = Elt(1);
  for (std::size_t j = 0; j <= terms; ++j) {
    for (std::size_t i = 0; i < len; ++i) geo[i] = f.add(geo[i], wp[i]);
    wp = mul(wp, w);
  }
  const std::vector<Elt> series = mul(head, geo);
  return std::vector<Elt>(series.begin() + 1, series.end());
}

/// Bezoutian by dividing u(X)v(Y) - v(X)u(Y) by X - Y coefficientwise.
inline Matrix bezoutian_by_division(const Poly& u, const Poly& v, std::size_t n) {
  const Field& f = u.field();
  // c[a][b] is the coefficient of X^a Y^b in the numerator.
  std::vector<std::vector<Elt>> c(n + 1, std::vector<Elt>(n + 1, Elt(0)));
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 0; b <= n; ++b)
      c[a][b] = f.sub(f.mul(u.coeff(a), v.coeff(b)), f.mul(v.coeff(a), u.coeff(b)));
  // N = (X - Y) Q gives c[a][b] = Q[a-1][b] - Q[a][b-1]; solve from the top row.
  std::vector<std::vector<Elt>> qm(n + 1, std::vector<Elt>(n + 1, Elt(0)));
  for (std::size_t a = n; a >= 1; --a) {
    for (std::size_t b = 0; b + 1 <= n; ++b) {
      const Elt above = b >= 1 ? qm[a][b - 1] : Elt(0);
      qm[a - 1][b] = f.add(c[a][b], above);
    }
  }
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = qm[i][j];
  return out;
}

}  // namespace hankelgf::oracle

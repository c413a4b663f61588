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

#include <gtest/gtest.h>

#include <random>

#include "hankelgf/error.hpp"
#include "oracles.hpp"

namespace hankelgf {
namespace {

Poly P(const Field& f, std::vector<std::uint32_t> codes) { return Poly::from_codes(f, codes); }

Vector V(std::vector<std::uint32_t> codes) {
  Vector v(static_cast<Eigen::Index>(codes.size()));
  for (std::size_t i = 0; i < codes.size(); ++i) v(static_cast<Eigen::Index>(i)) = Elt(codes[i]);
  return v;
}

Matrix M(std::vector<std::vector<std::uint32_t>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Elt(rows[i][j]);
  return m;
}

TEST(StructuredTest, HankelAndToeplitzEntries) {
  const Field f = Field::make(5);
  const HankelMatrix h(f, V({1, 2, 3, 4, 0}));
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.dense(), M({{1, 2, 3}, {2, 3, 4}, {3, 4, 0}}));
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      for (Eigen::Index r = 0; r < 3; ++r)
        for (Eigen::Index s = 0; s < 3; ++s)
          if (i + j == r + s) EXPECT_EQ(h(i, j), h(r, s));

  const ToeplitzMatrix t(f, V({1, 2, 3, 4, 0}));
  EXPECT_EQ(t.dense(), M({{3, 2, 1}, {4, 3, 2}, {0, 4, 3}}));

  EXPECT_THROW(HankelMatrix(f, V({1, 2})), InvalidArgument);
  EXPECT_THROW(HankelMatrix(f, V({7})), InvalidArgument);
}

TEST(StructuredTest, HankelToToeplitzIsRightMultiplicationByExchange) {
  const Field f2 = Field::make(2);
  const HankelMatrix id(f2, V({1, 0, 1}));
  EXPECT_EQ(id.dense(), identity(2));
  EXPECT_EQ(hankel_to_toeplitz(id).dense(), M({{0, 1}, {1, 0}}));

  const HankelMatrix zero(f2, V({0, 0, 0, 0, 0}));
  EXPECT_EQ(hankel_to_toeplitz(zero).dense(), zeros(3, 3));

  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const HankelMatrix& h : hankel_matrices(f, n)) {
        const ToeplitzMatrix t = hankel_to_toeplitz(h);
        ASSERT_EQ(t.dense(), oracle::product(f, h.dense(), exchange(static_cast<Eigen::Index>(n))));
        ASSERT_EQ(toeplitz_to_hankel(t), h);
        ASSERT_EQ(rank(t), rank(h));
      }
    }
  }
}

TEST(StructuredTest, RankExamples) {
  const Field f2 = Field::make(2);
  EXPECT_EQ(rank(f2, identity(4)), 4u);
  EXPECT_EQ(rank(f2, zeros(3, 3)), 0u);
  EXPECT_EQ(rank(HankelMatrix(f2, V({1, 1, 1, 1, 1}))), 1u);
  EXPECT_EQ(rank(f2, zeros(2, 5)), 0u);
}

TEST(StructuredTest, EliminationAgreesWithMinors) {
  std::mt19937 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Eigen::Index rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
      Matrix m(rows, cols);
      for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Elt(pick(rng) % (trial % 3 == 0 ? 2 : q));
      EXPECT_EQ(rank(f, m), oracle::rank_by_minors(f, m));
      if (rows == cols) EXPECT_EQ(determinant(f, m), oracle::det_cofactor(f, m));
    }
  }
}

TEST(StructuredTest, SolveRoundTrip) {
  std::mt19937 rng(5);
  const Field f = Field::of_order(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, 6);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Matrix a(3, 3);
    Vector b(3);
    for (Eigen::Index i = 0; i < 3; ++i) {
      b(i) = Elt(pick(rng));
      for (Eigen::Index j = 0; j < 3; ++j) a(i, j) = Elt(pick(rng));
    }
    if (determinant(f, a) == Elt(0)) {
      EXPECT_THROW(solve(f, a, b), SingularMatrix);
      continue;
    }
    const Vector x = solve(f, a, b);
    EXPECT_EQ(oracle::product(f, a, x), Matrix(b));
    ++solved;
  }
  EXPECT_GT(solved, 100);
}

TEST(StructuredTest, DeltaExamples) {
  const Field f2 = Field::make(2);
  EXPECT_EQ(delta(HankelMatrix(f2, V({0, 0, 0}))), 0u);
  EXPECT_EQ(delta(HankelMatrix(f2, V({0, 1, 0}))), 2u);
  EXPECT_EQ(delta(HankelMatrix(f2, V({1, 1, 1, 1, 1}))), 1u);
}

TEST(StructuredTest, DeltaNeverExceedsRank) {
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::make(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const HankelMatrix& h : hankel_matrices(f, n)) {
        const std::size_t d = delta(h);
        ASSERT_LE(d, rank(h));
        ASSERT_EQ(d, oracle::delta_by_cofactors(f, h.dense()));
      }
    }
  }
}

TEST(StructuredTest, BezoutianExamples) {
  const Field f2 = Field::make(2);
  const Poly u = P(f2, {1, 1, 1});
  EXPECT_EQ(bezoutian(u, P(f2, {0, 1}), 2), M({{1, 0}, {0, 1}}));
  EXPECT_EQ(bezoutian(u, u, 2), zeros(2, 2));
  EXPECT_EQ(bezoutian(u, P(f2, {1}), 2), M({{1, 1}, {1, 0}}));
  EXPECT_THROW(bezoutian(u, P(f2, {1}), 1), InvalidArgument);
}

TEST(StructuredTest, BezoutianMatchesBivariateDivision) {
  std::mt19937 rng(13);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    const Field f = Field::of_order(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 5;
      std::vector<Elt> uc(n + 1), vc(n + 1);
      for (auto& c : uc) c = Elt(pick(rng));
      for (auto& c : vc) c = Elt(pick(rng));
      const Poly u(f, uc), v(f, vc);
      const Matrix b = bezoutian(u, v, n);
      ASSERT_EQ(b, oracle::bezoutian_by_division(u, v, n));
      EXPECT_EQ(b, b.transpose());
      const Matrix bt = bezoutian(v, u, n);
      for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) EXPECT_EQ(bt(i, j), f.neg(b(i, j)));

      // (u(x) v(y) - v(x) u(y)) = (x - y) sum b_ij x^{i-1} y^{j-1}
      const Elt x(pick(rng)), y(pick(rng));
      if (x == y) continue;
      Elt form(0);
      for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
          form = f.add(form, f.mul(b(i, j), f.mul(f.pow(x, i), f.pow(y, j))));
      EXPECT_EQ(f.sub(f.mul(u(x), v(y)), f.mul(v(x), u(y))), f.mul(f.sub(x, y), form));
    }
  }
}

TEST(StructuredTest, BezoutianOfUAndOneIsAntitriangular) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Field f = Field::make(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const Poly& u : monic_polys(f, n)) {
        const Matrix b = bezoutian(u, Poly::constant(f, Elt(1)), n);
        EXPECT_EQ(rank(f, b), n);
        for (Eigen::Index i = 0; i < b.rows(); ++i)
          for (Eigen::Index j = 0; j < b.cols(); ++j) {
            if (i + j == b.rows() - 1) EXPECT_EQ(b(i, j), Elt(1));
            if (i + j >= b.rows()) EXPECT_EQ(b(i, j), Elt(0));
          }
      }
    }
  }
}

TEST(StructuredTest, BezoutianCriterion) {
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::make(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::uint64_t all_v = 1;
      for (std::size_t i = 0; i <= n; ++i) all_v *= q;
      for (const Poly& monic : monic_polys(f, n)) {
        for (std::uint32_t lead = 1; lead < q; ++lead) {
          const Poly u = scale(monic, Elt(lead));
          for (std::uint64_t idx = 0; idx < all_v; ++idx) {
            std::vector<Elt> vc(n + 1);
            std::uint64_t rest = idx;
            for (auto& c : vc) {
              c = Elt(static_cast<std::uint32_t>(rest % q));
              rest /= q;
            }
            const Poly v(f, vc);
            const bool coprime = gcd(u, v).is_one();
            ASSERT_EQ(rank(f, bezoutian(u, v, n)) == n, coprime);
          }
        }
      }
    }
  }
}

TEST(StructuredTest, BezoutianBothDegreesBelowOrder) {
  // Observed behaviour: with deg u, deg v < n the last row and column vanish,
  // so the Bezoutian is always singular.
  const Field f = Field::make(3);
  for (const Poly& u : monic_polys(f, 1)) {
    for (std::uint32_t c = 0; c < 3; ++c) {
      EXPECT_LT(rank(f, bezoutian(u, Poly::constant(f, Elt(c)), 2)), 2u);
    }
  }
}

TEST(StructuredTest, HankelEnumeration) {
  const Field f2 = Field::make(2);
  const auto one = hankel_matrices(f2, 1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].dense(), zeros(1, 1));
  EXPECT_EQ(one[1].dense(), identity(1));
  EXPECT_EQ(hankel_matrices(f2, 2).size(), 8u);
  EXPECT_EQ(hankel_matrices(Field::make(3), 2).size(), 27u);

  // lexicographic with a_1 most significant; ranges can be generated alone
  const auto all = hankel_matrices(Field::make(3), 2);
  EXPECT_EQ(all[1].a(), V({0, 0, 1}));
  EXPECT_EQ(all[9].a(), V({1, 0, 0}));
  for (std::uint64_t i = 10; i < 20; ++i) EXPECT_EQ(hankel_at(Field::make(3), 2, i), all[i]);
}

}  // namespace
}  // namespace hankelgf

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
#include <vector>

#include "hankelgf/field.hpp"
#include "hankelgf/linalg.hpp"
#include "hankelgf/poly.hpp"
#include "hankelgf/structured.hpp"

namespace hankelgf {

/// (u, v) with u monic of degree n >= 1 and deg v < n; v may be zero.
class PadePair {
 public:
  /// Throws InvalidArgument if the pair invariants fail.
  PadePair(Poly u, Poly v);

  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }
  std::size_t order() const { return *u_.degree(); }
  const Field& field() const { return u_.field(); }

  friend bool operator==(const PadePair&, const PadePair&) = default;

 private:
  Poly u_;
  Poly v_;
};

/// A Pade pair with gcd(u, v) = 1.
class HermitePair {
 public:
  HermitePair(Poly u, Poly v);

  const Poly& u() const { return pair_.u(); }
  const Poly& v() const { return pair_.v(); }
  std::size_t order() const { return pair_.order(); }
  const Field& field() const { return pair_.field(); }
  const PadePair& pade() const { return pair_; }

  friend bool operator==(const HermitePair&, const HermitePair&) = default;

 private:
  PadePair pair_;
};

/// (f, g) coprime, both monic of the same degree n >= 1.
class CoprimePair {
 public:
  CoprimePair(Poly f, Poly g);

  const Poly& f() const { return f_; }
  const Poly& g() const { return g_; }
  std::size_t order() const { return *f_.degree(); }
  const Field& field() const { return f_.field(); }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

 private:
  Poly f_;
  Poly g_;
};

/// (f, g) -> (f, g - f).
HermitePair to_hermite(const CoprimePair& p);

/// (u, v) -> (u, u + v); inverse of to_hermite.
CoprimePair to_coprime(const HermitePair& h);

/// First `terms` coefficients a_1, a_2, ... of v/u = sum_{i>=1} a_i X^{-i}.
///
/// Comparing coefficients in v = u * sum a_i X^{-i} with u_n = 1 gives
///   a_t = v_{n-t} - sum_{j=0}^{n-1} u_j a_{t-n+j},
/// where v_m = 0 for m < 0 and a_s = 0 for s <= 0.
std::vector<Elt> pade_expand(const PadePair& p, std::size_t terms);

/// H_n(u, v): the Hankel matrix of a_1, ..., a_{2n-1}.
HankelMatrix hankel_of_pair(const PadePair& p);

struct BarnettFactors {
  Matrix bezoutian_uv;  // B_n(u, v)
  Matrix bezoutian_u1;  // B_n(u, 1)
  HankelMatrix hankel;  // H_n(u, v)
};

/// The three matrices of B_n(u,v) = B_n(u,1) H_n(u,v) B_n(u,1). The identity
/// is checked; a mismatch raises InternalInconsistency.
BarnettFactors barnett_triple(const PadePair& p);

/// The surjection from coprime monic pairs onto nonsingular Toeplitz
/// matrices: (f, g) -> (f, g - f) -> H_n(f, g - f) -> H_n(f, g - f) E.
ToeplitzMatrix sigma(const CoprimePair& p);

/// The Hermite pair (u, v) with H_n(u, v) = b and expansion coefficient
/// a_{2n} = lambda. Throws SingularMatrix when b is singular.
HermitePair fiber_element(const HankelMatrix& b, Elt lambda);

/// The q coprime pairs whose Hermite image has Hankel matrix b, ordered by
/// ascending lambda code. Throws SingularMatrix when b is singular.
std::vector<CoprimePair> fiber(const HankelMatrix& b);

}  // namespace hankelgf

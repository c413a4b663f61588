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

#include "hankelgf/correspondence.hpp"

#include <string>

#include "hankelgf/error.hpp"

namespace hankelgf {

PadePair::PadePair(Poly u, Poly v) : u_(std::move(u)), v_(std::move(v)) {
  if (!(u_.field() == v_.field())) throw InvalidArgument("pair polynomials over different fields");
  if (!u_.is_monic() || *u_.degree() < 1) {
    throw InvalidArgument("Pade pair needs u monic of degree at least 1");
  }
  if (!(v_.degree() < u_.degree())) throw InvalidArgument("Pade pair needs deg v < deg u");
}

HermitePair::HermitePair(Poly u, Poly v) : pair_(std::move(u), std::move(v)) {
  if (!gcd(pair_.u(), pair_.v()).is_one()) throw InvalidArgument("Hermite pair needs gcd(u, v) = 1");
}

CoprimePair::CoprimePair(Poly f, Poly g) : f_(std::move(f)), g_(std::move(g)) {
  if (!(f_.field() == g_.field())) throw InvalidArgument("pair polynomials over different fields");
  if (!f_.is_monic() || !g_.is_monic() || f_.degree() != g_.degree() || *f_.degree() < 1) {
    throw InvalidArgument("coprime pair needs f, g monic of the same degree at least 1");
  }
  if (!gcd(f_, g_).is_one()) throw InvalidArgument("coprime pair needs gcd(f, g) = 1");
}

HermitePair to_hermite(const CoprimePair& p) { return HermitePair(p.f(), p.g() - p.f()); }

CoprimePair to_coprime(const HermitePair& h) { return CoprimePair(h.u(), h.u() + h.v()); }

std::vector<Elt> pade_expand(const PadePair& p, std::size_t terms) {
  if (terms < 1) throw InvalidArgument("expansion needs at least one term");
  const Field& f = p.field();
  const std::size_t n = p.order();
  // a[t] holds a_t; a[0] is the a_0 = 0 sentinel.
  std::vector<Elt> a(terms + 1, Elt(0));
  for (std::size_t t = 1; t <= terms; ++t) {
    Elt acc = t <= n ? p.v().coeff(n - t) : Elt(0);
    for (std::size_t j = 0; j < n; ++j) {
      // a_{t-n+j}, zero unless t - n + j >= 1
      if (t + j < n + 1) continue;
      acc = f.sub(acc, f.mul(p.u().coeff(j), a[t + j - n]));
    }
    a[t] = acc;
  }
  a.erase(a.begin());
  return a;
}

HankelMatrix hankel_of_pair(const PadePair& p) {
  const std::size_t n = p.order();
  const std::vector<Elt> a = pade_expand(p, 2 * n - 1);
  return HankelMatrix(p.field(), Eigen::Map<const Vector>(a.data(), static_cast<Eigen::Index>(a.size())));
}

BarnettFactors barnett_triple(const PadePair& p) {
  const Field& f = p.field();
  const std::size_t n = p.order();
  BarnettFactors out{bezoutian(p.u(), p.v(), n), bezoutian(p.u(), Poly::constant(f, Elt(1)), n),
                     hankel_of_pair(p)};
  const Matrix product = multiply(f, multiply(f, out.bezoutian_u1, out.hankel.dense()), out.bezoutian_u1);
  if (product != out.bezoutian_uv) {
    throw InternalInconsistency("Barnett factorization failed for a Pade pair of order " + std::to_string(n));
  }
  return out;
}

ToeplitzMatrix sigma(const CoprimePair& p) { return hankel_to_toeplitz(hankel_of_pair(to_hermite(p).pade())); }

HermitePair fiber_element(const HankelMatrix& b, Elt lambda) {
  const Field& f = b.field();
  if (!f.contains(lambda)) throw InvalidArgument("lambda out of range for the field");
  const auto n = static_cast<Eigen::Index>(b.order());

  // b_1..b_{2n} with b_{2n} = lambda, zero-based.
  Vector seq(2 * n);
  seq.head(2 * n - 1) = b.a();
  seq(2 * n - 1) = lambda;

  // B (u_0, ..., u_{n-1})^T = -(b_{n+1}, ..., b_{2n})^T
  Vector rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = f.neg(seq(n + i));
  const Vector low = solve(f, b.dense(), rhs);

  std::vector<Elt> u(low.data(), low.data() + n);
  u.push_back(Elt(1));

  // Upper-triangular Toeplitz system: v_i = sum_{j>=i} b_{j-i+1} u_{j+1}.
  std::vector<Elt> v(static_cast<std::size_t>(n), Elt(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    Elt acc(0);
    for (Eigen::Index j = i; j < n; ++j) acc = f.add(acc, f.mul(seq(j - i), u[static_cast<std::size_t>(j + 1)]));
    v[static_cast<std::size_t>(i)] = acc;
  }

  Poly up(f, std::move(u));
  Poly vp(f, std::move(v));
  if (!gcd(up, vp).is_one()) {
    throw InternalInconsistency("reconstructed pair from a nonsingular Hankel matrix is not coprime");
  }
  return HermitePair(std::move(up), std::move(vp));
}

std::vector<CoprimePair> fiber(const HankelMatrix& b) {
  if (!is_nonsingular(b)) throw SingularMatrix("fiber requested over a singular Hankel matrix");
  std::vector<CoprimePair> out;
  out.reserve(b.field().order());
  for (Elt lambda : b.field().elements()) out.push_back(to_coprime(fiber_element(b, lambda)));
  return out;
}

}  // namespace hankelgf

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

#include "hankelgf/poly.hpp"

#include <algorithm>

#include "hankelgf/error.hpp"

namespace hankelgf {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw InvalidArgument("polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<Elt> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elt c : coeffs_) {
    if (!field_.contains(c)) {
      throw InvalidArgument("coefficient " + std::to_string(c.code) + " out of range for GF(" +
                            std::to_string(field_.order()) + ")");
    }
  }
  normalize();
}

Poly Poly::constant(Field field, Elt c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(Field field, std::size_t d) {
  std::vector<Elt> c(d + 1, Elt(0));
  c[d] = Elt(1);
  return Poly(std::move(field), std::move(c));
}

Poly Poly::from_codes(Field field, std::span<const std::uint32_t> codes) {
  std::vector<Elt> c;
  c.reserve(codes.size());
  for (auto code : codes) c.emplace_back(code);
  return Poly(std::move(field), std::move(c));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Elt(0)) coeffs_.pop_back();
}

Elt Poly::operator()(Elt x) const {
  Elt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, x), *it);
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Elt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Elt> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field().neg(a.coeff(i));
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Elt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Elt> c(a.coeffs().size() + b.coeffs().size() - 1, Elt(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == Elt(0)) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeff(i), b.coeff(j)));
    }
  }
  return Poly(f, std::move(c));
}

Poly scale(const Poly& a, Elt s) {
  std::vector<Elt> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field().mul(a.coeff(i), s);
  return Poly(a.field(), std::move(c));
}

DivRem divrem(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const Field& f = a.field();
  const std::size_t db = *b.degree();
  std::vector<Elt> rem = a.coeffs();
  if (rem.size() <= db) return {Poly(f), a};

  std::vector<Elt> quot(rem.size() - db, Elt(0));
  const Elt lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elt c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (c == Elt(0)) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeff(j)));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly make_monic(const Poly& a) {
  if (a.is_zero()) throw InvalidArgument("the zero polynomial has no monic associate");
  return scale(a, a.field().inv(a.leading()));
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  Poly x = a.is_zero() ? a : make_monic(a);
  Poly y = b.is_zero() ? b : make_monic(b);
  while (!y.is_zero()) {
    Poly r = divrem(x, y).remainder;
    x = std::move(y);
    y = r.is_zero() ? std::move(r) : make_monic(r);
  }
  return x;
}

Poly gcd(std::span<const Poly> fs) {
  if (fs.empty()) throw InvalidArgument("gcd of an empty tuple");
  const auto nonzero = std::find_if(fs.begin(), fs.end(), [](const Poly& p) { return !p.is_zero(); });
  if (nonzero == fs.end()) throw InvalidArgument("gcd of an all-zero tuple");
  Poly g = make_monic(*nonzero);
  for (const Poly& f : fs) {
    if (g.is_one()) break;
    if (!f.is_zero()) g = gcd(g, f);
    else require_same_field(g, f);
  }
  return g;
}

bool tuple_coprime(std::span<const Poly> fs) { return gcd(fs).is_one(); }

Poly monic_poly_at(const Field& field, std::size_t n, std::uint64_t index) {
  const std::uint32_t q = field.order();
  std::vector<Elt> c(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = Elt(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
  c[n] = Elt(1);
  return Poly(field, std::move(c));
}

std::vector<Poly> monic_polys(const Field& field, std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= field.order();
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(monic_poly_at(field, n, i));
  return out;
}

}  // namespace hankelgf

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
#include <optional>
#include <span>
#include <vector>

#include "hankelgf/field.hpp"

namespace hankelgf {

/// Degree of a polynomial; the zero polynomial has the disengaged degree,
/// which compares below every natural number.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over a finite field, ascending coefficients.
///
/// The highest stored coefficient is nonzero; the zero polynomial stores no
/// coefficients.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elt> coeffs);

  static Poly constant(Field field, Elt c);
  /// X^d.
  static Poly monomial(Field field, std::size_t d);
  static Poly from_codes(Field field, std::span<const std::uint32_t> codes);

  const Field& field() const { return field_; }
  const std::vector<Elt>& coeffs() const { return coeffs_; }

  Degree degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Elt(1); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Elt(1); }

  /// Coefficient of X^i; zero past the degree.
  Elt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elt(0); }
  Elt leading() const { return coeffs_.empty() ? Elt(0) : coeffs_.back(); }

  Elt operator()(Elt x) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  Field field_;
  std::vector<Elt> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elt c);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws InvalidArgument when b is zero.
DivRem divrem(const Poly& a, const Poly& b);

/// Scales a nonzero polynomial to leading coefficient 1.
Poly make_monic(const Poly& a);

/// Monic greatest common divisor; gcd(0, 0) is rejected.
Poly gcd(const Poly& a, const Poly& b);

/// Monic GCD of every entry of a tuple with at least one nonzero entry.
Poly gcd(std::span<const Poly> fs);

/// True iff the entries share no nonconstant common factor.
bool tuple_coprime(std::span<const Poly> fs);

/// Monic polynomials of degree exactly n. Position i holds the polynomial
/// whose low coefficients are the base-q digits of i, a_0 least significant.
std::vector<Poly> monic_polys(const Field& field, std::size_t n);

/// The monic polynomial of degree n at position index of monic_polys.
Poly monic_poly_at(const Field& field, std::size_t n, std::uint64_t index);

}  // namespace hankelgf

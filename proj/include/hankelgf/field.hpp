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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace hankelgf {

/// An element of GF(q) in its canonical integer encoding.
///
/// For q = p^k the code c = sum c_i p^i stands for sum c_i alpha^i, where
/// alpha is a root of the field modulus. For prime fields the code is the
/// residue itself. Code 0 is the additive and code 1 the multiplicative
/// identity in every field.
struct Elt {
  std::uint32_t code = 0;

  constexpr Elt() = default;
  constexpr explicit Elt(std::uint32_t c) : code(c) {}

  friend constexpr bool operator==(Elt, Elt) = default;
  friend constexpr auto operator<=>(Elt, Elt) = default;
};

inline std::ostream& operator<<(std::ostream& os, Elt e) { return os << e.code; }

/// GF(p^k) with a fixed polynomial basis.
///
/// A Field is an immutable value; copies share the precomputed tables.
class Field {
 public:
  /// Builds GF(p^k). For k > 1 and no explicit modulus the built-in table is
  /// consulted. A supplied modulus (ascending coefficients c_0..c_k) must be
  /// monic of degree k and irreducible over GF(p).
  static Field make(std::uint32_t p, std::uint32_t k = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Shorthand for the field of order q using the built-in modulus.
  static Field of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->k; }
  std::uint32_t order() const { return impl_->q; }
  /// Ascending coefficients of the modulus; empty for prime fields.
  std::span<const std::uint32_t> modulus() const { return impl_->modulus; }
  bool is_prime_field() const { return impl_->k == 1; }

  bool contains(Elt a) const { return a.code < impl_->q; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;

  /// All q elements in ascending code order.
  std::vector<Elt> elements() const;

  /// Two fields are equal when they use the same characteristic and modulus.
  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    // Extension fields only: discrete log tables w.r.t. a primitive element.
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check(Elt a) const;

  std::shared_ptr<const Impl> impl_;
};

/// Built-in modulus for GF(p^k), ascending coefficients, if one is shipped.
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, std::uint32_t k);

bool is_prime(std::uint64_t n);

/// Decomposes q = p^k; nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Exhaustive irreducibility test for a monic polynomial over GF(p),
/// coefficients ascending. Intended for small p^deg only.
bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p);

}  // namespace hankelgf

namespace Eigen {

// Elt is used as a storage-only scalar; arithmetic always goes through a Field.
template <>
struct NumTraits<hankelgf::Elt> : GenericNumTraits<hankelgf::Elt> {
  using Real = hankelgf::Elt;
  using NonInteger = hankelgf::Elt;
  using Literal = hankelgf::Elt;
  using Nested = hankelgf::Elt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
};

}  // namespace Eigen

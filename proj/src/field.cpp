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

#include "hankelgf/field.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hankelgf/error.hpp"

namespace hankelgf {

namespace {

constexpr std::uint32_t kMaxExtensionOrder = 1u << 20;

using Digits = std::vector<std::uint32_t>;

// Ascending coefficients, chosen with the fewest nonzero terms and then
// lexicographically smallest from the top; GF(4) and GF(9) use X^2+X+1 and
// X^2+1.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Digits>& modulus_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Digits> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 1, 0, 0, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 1, 0, 0, 0, 0, 1}},
      {{5, 2}, {2, 0, 1}},
      {{5, 3}, {1, 1, 0, 1}},
      {{5, 4}, {2, 0, 0, 0, 1}},
      {{7, 2}, {1, 0, 1}},
      {{7, 3}, {2, 0, 0, 1}},
      {{11, 2}, {1, 0, 1}},
      {{13, 2}, {2, 0, 1}},
  };
  return table;
}

Digits to_digits(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Digits d(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

// Remainder of a modulo the monic polynomial m, all over GF(p).
Digits rem_mod_p(Digits a, std::span<const std::uint32_t> m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint64_t sub = (c * m[j]) % p;
      a[i - dm + j] = static_cast<std::uint32_t>((a[i - dm + j] + p - sub) % p);
    }
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

std::uint32_t mul_codes(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                        const Digits& modulus) {
  const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
  const Digits da = to_digits(a, p, k);
  const Digits db = to_digits(b, p, k);
  Digits prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    }
  }
  Digits r = rem_mod_p(std::move(prod), modulus, p);
  r.resize(k, 0);
  return from_digits(r, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2 || q > UINT32_MAX) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), k};
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  if (coeffs.size() < 2 || coeffs.back() != 1) return false;
  const std::size_t deg = coeffs.size() - 1;
  const Digits f(coeffs.begin(), coeffs.end());
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic divisor candidate of degree d, low coefficients enumerated
    // as a base-p counter.
    Digits g(d + 1, 0);
    g[d] = 1;
    while (true) {
      const Digits r = rem_mod_p(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, std::uint32_t k) {
  const auto& table = modulus_table();
  if (auto it = table.find({p, k}); it != table.end()) return it->second;
  return std::nullopt;
}

Field Field::make(std::uint32_t p, std::uint32_t k,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidArgument("field extension degree must be at least 1");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;

  if (k == 1) {
    if (modulus && !modulus->empty()) {
      throw InvalidArgument("a prime field takes no modulus");
    }
    impl->q = p;
    return Field(std::move(impl));
  }

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxExtensionOrder) {
      throw InvalidArgument("extension field of order " + std::to_string(p) + "^" +
                            std::to_string(k) + " is too large");
    }
  }
  impl->q = static_cast<std::uint32_t>(q);

  if (!modulus) {
    modulus = builtin_modulus(p, k);
    if (!modulus) {
      throw InvalidArgument("no built-in modulus for GF(" + std::to_string(p) + "^" +
                            std::to_string(k) + "); supply one explicitly");
    }
  }
  if (modulus->size() != k + 1) {
    throw InvalidArgument("modulus must have degree " + std::to_string(k));
  }
  for (auto c : *modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient " + std::to_string(c) + " is not in GF(p)");
  }
  if (modulus->back() != 1) throw InvalidArgument("modulus must be monic");
  if (!is_irreducible_mod_p(*modulus, p)) throw InvalidArgument("modulus is reducible");
  impl->modulus = std::move(*modulus);

  // Log/antilog tables from the first primitive element in code order.
  const std::uint32_t n = impl->q - 1;
  impl->exp.assign(n, 0);
  impl->log.assign(impl->q, 0);
  for (std::uint32_t g = 2; g < impl->q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t i = 0;
    bool primitive = true;
    for (; i < n; ++i) {
      if (i > 0 && x == 1) {
        primitive = false;
        break;
      }
      impl->exp[i] = x;
      x = mul_codes(x, g, p, impl->modulus);
    }
    if (primitive && x == 1) break;
  }
  for (std::uint32_t i = 0; i < n; ++i) impl->log[impl->exp[i]] = i;
  return Field(std::move(impl));
}

Field Field::of_order(std::uint32_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
  return make(pk->first, pk->second);
}

void Field::check(Elt a) const {
  if (a.code >= impl_->q) {
    throw InvalidArgument("element code " + std::to_string(a.code) + " out of range for GF(" +
                          std::to_string(impl_->q) + ")");
  }
}

Elt Field::add(Elt a, Elt b) const {
  check(a);
  check(b);
  const std::uint32_t p = impl_->p;
  if (impl_->k == 1) return Elt(static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % p));
  if (p == 2) return Elt(a.code ^ b.code);
  std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < impl_->k; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return Elt(out);
}

Elt Field::neg(Elt a) const {
  check(a);
  const std::uint32_t p = impl_->p;
  if (impl_->k == 1) return Elt(a.code == 0 ? 0 : p - a.code);
  if (p == 2) return a;
  std::uint32_t x = a.code, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < impl_->k; ++i) {
    out += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return Elt(out);
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul(Elt a, Elt b) const {
  check(a);
  check(b);
  if (impl_->k == 1) {
    return Elt(static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % impl_->p));
  }
  if (a.code == 0 || b.code == 0) return Elt(0);
  const std::uint32_t n = impl_->q - 1;
  const std::uint32_t e = (impl_->log[a.code] + impl_->log[b.code]) % n;
  return Elt(impl_->exp[e]);
}

Elt Field::inv(Elt a) const {
  check(a);
  if (a.code == 0) throw InvalidArgument("inverse of zero");
  if (impl_->k == 1) return pow(a, impl_->p - 2);
  const std::uint32_t n = impl_->q - 1;
  return Elt(impl_->exp[(n - impl_->log[a.code]) % n]);
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  check(a);
  Elt result(1);
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::vector<Elt> Field::elements() const {
  std::vector<Elt> out;
  out.reserve(impl_->q);
  for (std::uint32_t c = 0; c < impl_->q; ++c) out.emplace_back(c);
  return out;
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k &&
         a.impl_->modulus == b.impl_->modulus;
}

}  // namespace hankelgf

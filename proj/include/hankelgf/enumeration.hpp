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
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hankelgf/field.hpp"
#include "hankelgf/structured.hpp"

namespace hankelgf {

using BigInt = boost::multiprecision::cpp_int;

// Closed-form counts. q must be a prime power.

/// Ordered m-tuples of coprime monic polynomials of the given degrees:
/// q^{sum n_i} (1 - q^{1-m}) when every n_i >= 1, else q^{sum n_i}.
BigInt count_coprime_tuples(std::uint64_t q, std::span<const std::size_t> degrees);

/// n x n Hankel matrices of rank exactly r.
BigInt count_hankel_by_rank(std::uint64_t q, std::size_t n, std::size_t r);

/// n x n Hankel matrices with delta = k.
BigInt count_stratum(std::uint64_t q, std::size_t n, std::size_t k);

/// n x n Hankel matrices with delta = k and rank <= r, for 0 <= k <= r < n.
BigInt count_stratum_rank(std::uint64_t q, std::size_t n, std::size_t k, std::size_t r);

/// n x n Hankel matrices with rank <= r, for 0 <= r < n (q^{2r}).
BigInt count_rank_at_most(std::uint64_t q, std::size_t n, std::size_t r);

// Membership tests driven by the linear recurrence
//   a_{k+t} = x_1 a_t + ... + x_k a_{t+k-1}.

/// The unique x with A_k x = (a_{k+1}, ..., a_{2k})^T, for 1 <= k <= n-1.
/// Throws SingularMatrix when A_k is singular.
Vector recurrence_vector(const HankelMatrix& a, std::size_t k);

/// delta(A) == k, decided from the recurrence without computing minors above
/// k. k = 0 checks a_1 = ... = a_n = 0; k = n checks the full determinant.
bool in_stratum(const HankelMatrix& a, std::size_t k);

/// delta(A) == k and rank(A) <= r, decided from the recurrence extended to
/// t = 2n - r - 1. Requires 0 <= k <= r < n.
bool in_stratum_rank(const HankelMatrix& a, std::size_t k, std::size_t r);

// Exhaustive oracles.

struct EnumerationOptions {
  std::uint64_t budget = 100'000'000;  // objects; exceeding it is an error
  unsigned jobs = 1;                   // worker threads
};

/// Hankel matrices of one order tallied by (rank, delta).
struct CensusTable {
  Field field;
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, BigInt> cells;  // (rank, delta) -> count

  BigInt total() const;
  BigInt count(std::size_t rank, std::size_t delta) const;
  std::map<std::size_t, BigInt> by_rank() const;
  std::map<std::size_t, BigInt> by_delta() const;
  /// Matrices with delta = k and rank <= r.
  BigInt delta_rank_at_most(std::size_t k, std::size_t r) const;
};

/// Monic tuples of fixed degrees tallied by the degree of their GCD.
struct CoprimeCensus {
  Field field;
  std::vector<std::size_t> degrees;
  std::map<std::size_t, BigInt> by_gcd_degree;

  BigInt total() const;
};

/// Rank and delta of every Hankel matrix of order n, computed by dense
/// elimination only.
CensusTable brute_hankel_census(const Field& field, std::size_t n, const EnumerationOptions& opts = {});

/// GCD degree of every monic tuple with the given degrees.
CoprimeCensus brute_coprime_census(const Field& field, std::span<const std::size_t> degrees,
                                   const EnumerationOptions& opts = {});

struct SigmaReport {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::uint64_t pairs = 0;                 // coprime monic pairs enumerated
  std::uint64_t images = 0;                // distinct Toeplitz images
  std::uint64_t expected_images = 0;       // nonsingular Toeplitz matrices of order n
  bool images_nonsingular = false;
  bool surjective = false;
  bool fibers_uniform = false;             // every fiber has exactly q pairs
  std::uint64_t fiber_size = 0;            // common fiber size, 0 if not uniform
  bool fibers_reconstructed = false;       // fiber() returns each preimage set exactly

  bool passed() const {
    return images_nonsingular && surjective && fibers_uniform && fibers_reconstructed;
  }
};

/// Exhaustive check of sigma over all coprime monic pairs of degree n.
SigmaReport verify_sigma(const Field& field, std::size_t n, const EnumerationOptions& opts = {});

}  // namespace hankelgf

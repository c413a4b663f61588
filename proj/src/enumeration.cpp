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

#include "hankelgf/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "hankelgf/correspondence.hpp"
#include "hankelgf/error.hpp"
#include "hankelgf/linalg.hpp"
#include "hankelgf/poly.hpp"

namespace hankelgf {

namespace {

BigInt checked_q(std::uint64_t q) {
  if (!prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  return BigInt(q);
}

BigInt power(const BigInt& base, std::size_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

std::uint64_t budgeted_power(std::uint64_t q, std::size_t e, std::uint64_t budget, const char* what) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (count > budget / q) {
      throw BudgetExceeded(std::string(what) + " needs " + std::to_string(q) + "^" + std::to_string(e) +
                           " objects, over the budget of " + std::to_string(budget));
    }
    count *= q;
  }
  return count;
}

// Splits [0, count) into contiguous chunks, runs work(begin, end) -> Tally on
// each, and merges with merge(into, from). The result does not depend on
// the number of workers.
template <typename Tally, typename Work, typename Merge>
Tally parallel_tally(std::uint64_t count, unsigned jobs, Work work, Merge merge) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2 * jobs) return work(std::uint64_t{0}, count);
  std::vector<Tally> partial(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::uint64_t chunk = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = std::min(count, w * chunk);
    const std::uint64_t end = std::min(count, begin + chunk);
    workers.emplace_back([&, w, begin, end] { partial[w] = work(begin, end); });
  }
  for (auto& t : workers) t.join();
  Tally out = std::move(partial[0]);
  for (unsigned w = 1; w < jobs; ++w) merge(out, partial[w]);
  return out;
}

template <typename Key>
void merge_counts(std::map<Key, std::uint64_t>& into, const std::map<Key, std::uint64_t>& from) {
  for (const auto& [k, c] : from) into[k] += c;
}

// a_{k+t} = sum_s x_s a_{t+s-1} for t = 1..t_max.
bool recurrence_holds(const HankelMatrix& a, const Vector& x, std::size_t t_max) {
  const Field& f = a.field();
  const auto k = x.size();
  for (std::size_t t = 1; t <= t_max; ++t) {
    const auto ti = static_cast<Eigen::Index>(t);
    Elt acc(0);
    for (Eigen::Index s = 0; s < k; ++s) acc = f.add(acc, f.mul(x(s), a.a()(ti + s - 1)));
    if (acc != a.a()(k + ti - 1)) return false;
  }
  return true;
}

bool leading_zeros(const HankelMatrix& a, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (a.a()(static_cast<Eigen::Index>(i)) != Elt(0)) return false;
  }
  return true;
}

std::uint64_t monic_index(const Poly& p) {
  std::uint64_t index = 0;
  const std::size_t n = *p.degree();
  for (std::size_t i = n; i-- > 0;) index = index * p.field().order() + p.coeff(i).code;
  return index;
}

std::vector<std::uint32_t> codes_of(const Vector& v) {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i).code;
  return out;
}

Vector vector_of(const std::vector<std::uint32_t>& codes) {
  Vector v(static_cast<Eigen::Index>(codes.size()));
  for (std::size_t i = 0; i < codes.size(); ++i) v(static_cast<Eigen::Index>(i)) = Elt(codes[i]);
  return v;
}

}  // namespace

BigInt count_coprime_tuples(std::uint64_t q, std::span<const std::size_t> degrees) {
  const BigInt bq = checked_q(q);
  if (degrees.empty()) throw InvalidArgument("need at least one degree");
  const std::size_t sum = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  const std::size_t m = degrees.size();
  const BigInt all = power(bq, sum);
  if (*std::min_element(degrees.begin(), degrees.end()) == 0) return all;
  // q^S (1 - q^{1-m}) = q^S - q^{S+1-m}, and S >= m here.
  return all - power(bq, sum + 1 - m);
}

BigInt count_hankel_by_rank(std::uint64_t q, std::size_t n, std::size_t r) {
  const BigInt bq = checked_q(q);
  if (n == 0) throw InvalidArgument("Hankel order must be at least 1");
  if (r > n) throw InvalidArgument("rank " + std::to_string(r) + " exceeds order " + std::to_string(n));
  if (r == 0) return 1;
  if (r < n) return power(bq, 2 * r - 2) * (bq * bq - 1);
  return power(bq, 2 * n - 2) * (bq - 1);
}

BigInt count_stratum(std::uint64_t q, std::size_t n, std::size_t k) {
  const BigInt bq = checked_q(q);
  if (n == 0) throw InvalidArgument("Hankel order must be at least 1");
  if (k > n) throw InvalidArgument("stratum index " + std::to_string(k) + " exceeds order " + std::to_string(n));
  if (k == 0) return power(bq, n - 1);
  return power(bq, n + k - 2) * (bq - 1);
}

BigInt count_stratum_rank(std::uint64_t q, std::size_t n, std::size_t k, std::size_t r) {
  const BigInt bq = checked_q(q);
  if (!(k <= r && r < n)) throw InvalidArgument("need 0 <= k <= r < n");
  if (k == 0) return power(bq, r);
  return power(bq, r + k - 1) * (bq - 1);
}

BigInt count_rank_at_most(std::uint64_t q, std::size_t n, std::size_t r) {
  const BigInt bq = checked_q(q);
  if (r >= n) throw InvalidArgument("need 0 <= r < n");
  return power(bq, 2 * r);
}

Vector recurrence_vector(const HankelMatrix& a, std::size_t k) {
  const std::size_t n = a.order();
  if (k < 1 || k >= n) throw InvalidArgument("recurrence length must satisfy 1 <= k <= n-1");
  const auto kk = static_cast<Eigen::Index>(k);
  const Vector rhs = a.a().segment(kk, kk);
  return solve(a.field(), a.leading(k), rhs);
}

bool in_stratum(const HankelMatrix& a, std::size_t k) {
  const std::size_t n = a.order();
  if (k > n) throw InvalidArgument("stratum index exceeds the order");
  if (k == 0) return leading_zeros(a, n);
  if (k == n) return is_nonsingular(a);
  if (!is_nonsingular(a.field(), a.leading(k))) return false;
  return recurrence_holds(a, recurrence_vector(a, k), n);
}

bool in_stratum_rank(const HankelMatrix& a, std::size_t k, std::size_t r) {
  const std::size_t n = a.order();
  if (!(k <= r && r < n)) throw InvalidArgument("need 0 <= k <= r < n");
  if (k == 0) return leading_zeros(a, 2 * n - r - 1);
  if (!is_nonsingular(a.field(), a.leading(k))) return false;
  return recurrence_holds(a, recurrence_vector(a, k), 2 * n - r - 1);
}

BigInt CensusTable::total() const {
  BigInt t = 0;
  for (const auto& [key, c] : cells) t += c;
  return t;
}

BigInt CensusTable::count(std::size_t rank, std::size_t delta) const {
  const auto it = cells.find({rank, delta});
  return it == cells.end() ? BigInt(0) : it->second;
}

std::map<std::size_t, BigInt> CensusTable::by_rank() const {
  std::map<std::size_t, BigInt> out;
  for (std::size_t r = 0; r <= n; ++r) out[r] = 0;
  for (const auto& [key, c] : cells) out[key.first] += c;
  return out;
}

std::map<std::size_t, BigInt> CensusTable::by_delta() const {
  std::map<std::size_t, BigInt> out;
  for (std::size_t k = 0; k <= n; ++k) out[k] = 0;
  for (const auto& [key, c] : cells) out[key.second] += c;
  return out;
}

BigInt CensusTable::delta_rank_at_most(std::size_t k, std::size_t r) const {
  BigInt t = 0;
  for (const auto& [key, c] : cells) {
    if (key.second == k && key.first <= r) t += c;
  }
  return t;
}

BigInt CoprimeCensus::total() const {
  BigInt t = 0;
  for (const auto& [d, c] : by_gcd_degree) t += c;
  return t;
}

CensusTable brute_hankel_census(const Field& field, std::size_t n, const EnumerationOptions& opts) {
  if (n == 0) throw InvalidArgument("Hankel order must be at least 1");
  const std::uint64_t count = budgeted_power(field.order(), 2 * n - 1, opts.budget, "Hankel census");

  using Tally = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;
  const Tally tally = parallel_tally<Tally>(
      count, opts.jobs,
      [&](std::uint64_t begin, std::uint64_t end) {
        Tally t;
        for (std::uint64_t i = begin; i < end; ++i) {
          const HankelMatrix a = hankel_at(field, n, i);
          ++t[{rank(field, a.dense()), delta(a)}];
        }
        return t;
      },
      merge_counts<std::pair<std::size_t, std::size_t>>);

  CensusTable table{field, n, {}};
  for (const auto& [key, c] : tally) table.cells[key] = c;
  return table;
}

CoprimeCensus brute_coprime_census(const Field& field, std::span<const std::size_t> degrees,
                                   const EnumerationOptions& opts) {
  if (degrees.empty()) throw InvalidArgument("need at least one degree");
  const std::size_t sum = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  const std::uint64_t count = budgeted_power(field.order(), sum, opts.budget, "coprime census");

  std::vector<std::uint64_t> radix;
  for (std::size_t d : degrees) radix.push_back(budgeted_power(field.order(), d, opts.budget, "coprime census"));

  using Tally = std::map<std::size_t, std::uint64_t>;
  const Tally tally = parallel_tally<Tally>(
      count, opts.jobs,
      [&](std::uint64_t begin, std::uint64_t end) {
        Tally t;
        std::vector<Poly> tuple;
        tuple.reserve(degrees.size());
        for (std::uint64_t i = begin; i < end; ++i) {
          tuple.clear();
          std::uint64_t rest = i;
          for (std::size_t j = 0; j < degrees.size(); ++j) {
            tuple.push_back(monic_poly_at(field, degrees[j], rest % radix[j]));
            rest /= radix[j];
          }
          ++t[*gcd(tuple).degree()];
        }
        return t;
      },
      merge_counts<std::size_t>);

  CoprimeCensus census{field, std::vector<std::size_t>(degrees.begin(), degrees.end()), {}};
  const std::size_t min_degree = *std::min_element(degrees.begin(), degrees.end());
  for (std::size_t d = 0; d <= min_degree; ++d) census.by_gcd_degree[d] = 0;
  for (const auto& [d, c] : tally) census.by_gcd_degree[d] = c;
  return census;
}

SigmaReport verify_sigma(const Field& field, std::size_t n, const EnumerationOptions& opts) {
  if (n == 0) throw InvalidArgument("order must be at least 1");
  const std::uint32_t q = field.order();
  const std::uint64_t per_poly = budgeted_power(q, n, opts.budget, "sigma verification");
  const std::uint64_t count = budgeted_power(q, 2 * n, opts.budget, "sigma verification");

  // Toeplitz defining vector -> preimage pairs as (index of f, index of g).
  using Preimages = std::map<std::vector<std::uint32_t>, std::vector<std::pair<std::uint64_t, std::uint64_t>>>;
  const Preimages images = parallel_tally<Preimages>(
      count, opts.jobs,
      [&](std::uint64_t begin, std::uint64_t end) {
        Preimages out;
        for (std::uint64_t i = begin; i < end; ++i) {
          const std::uint64_t fi = i / per_poly;
          const std::uint64_t gi = i % per_poly;
          Poly f = monic_poly_at(field, n, fi);
          Poly g = monic_poly_at(field, n, gi);
          if (!gcd(f, g).is_one()) continue;
          const ToeplitzMatrix t = sigma(CoprimePair(std::move(f), std::move(g)));
          out[codes_of(t.a())].emplace_back(fi, gi);
        }
        return out;
      },
      [](Preimages& into, const Preimages& from) {
        for (const auto& [key, v] : from) into[key].insert(into[key].end(), v.begin(), v.end());
      });

  SigmaReport report;
  report.q = q;
  report.n = n;
  report.images = images.size();
  report.expected_images = static_cast<std::uint64_t>(count_stratum(q, n, n));
  for (const auto& [key, pre] : images) report.pairs += pre.size();

  report.images_nonsingular = std::all_of(images.begin(), images.end(), [&](const auto& entry) {
    return is_nonsingular(field, ToeplitzMatrix(field, vector_of(entry.first)).dense());
  });

  // Every nonsingular Toeplitz matrix must appear; enumerated via the Hankel
  // bijection, which keeps the defining vector.
  bool all_hit = report.images == report.expected_images;
  const std::uint64_t hankels = hankel_count(field, n);
  for (std::uint64_t i = 0; all_hit && i < hankels; ++i) {
    const HankelMatrix h = hankel_at(field, n, i);
    if (is_nonsingular(h) && !images.contains(codes_of(h.a()))) all_hit = false;
  }
  report.surjective = report.images_nonsingular && all_hit;

  report.fibers_uniform = !images.empty() && std::all_of(images.begin(), images.end(), [&](const auto& entry) {
    return entry.second.size() == q;
  });
  report.fiber_size = report.fibers_uniform ? q : 0;

  report.fibers_reconstructed = report.images_nonsingular;
  for (const auto& [key, pre] : images) {
    if (!report.fibers_reconstructed) break;
    const HankelMatrix h = toeplitz_to_hankel(ToeplitzMatrix(field, vector_of(key)));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rebuilt;
    for (const CoprimePair& p : fiber(h)) rebuilt.emplace_back(monic_index(p.f()), monic_index(p.g()));
    auto expected = pre;
    std::sort(expected.begin(), expected.end());
    std::sort(rebuilt.begin(), rebuilt.end());
    if (rebuilt != expected) report.fibers_reconstructed = false;
  }
  return report;
}

}  // namespace hankelgf

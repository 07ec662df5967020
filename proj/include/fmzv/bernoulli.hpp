// Copyright 2026 The fmzv Authors. All Rights Reserved.
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

#ifndef FMZV_BERNOULLI_HPP
#define FMZV_BERNOULLI_HPP

#include "fmzv/adelic.hpp"
#include "fmzv/combinatorics.hpp"
#include "fmzv/rational.hpp"
#include "fmzv/residue.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fmzv {

/// Sign convention for B_1. Seki's convention (B_1 = +1/2) is the default;
/// B_n for n != 1 is the same under both.
enum class BernoulliConvention { seki, classical };

inline constexpr unsigned kMaxExactBernoulli = 60;

/// B_n from sum_{j=0}^{n} C(n+1, j) B_j = n + 1 (Seki) or = 0 for n >= 1
/// (classical).
inline Rational bernoulli_exact(unsigned n, BernoulliConvention convention = BernoulliConvention::seki) {
  if (n > kMaxExactBernoulli) throw std::out_of_range("bernoulli_exact supports n <= 60");
  std::vector<Rational> b{Rational(1)};
  for (unsigned k = 1; k <= n; ++k) {
    Rational acc = convention == BernoulliConvention::seki ? Rational(k + 1) : Rational(0);
    for (unsigned j = 0; j < k; ++j) acc -= Rational(binomial(k + 1, j)) * b[j];
    b.push_back(acc / (k + 1));
  }
  return b[n];
}

/// B_0, ..., B_{p-2} reduced mod p^2. These are all p-integral by von
/// Staudt-Clausen, so the exact recurrence can be run inside Z/p^2 with
/// divisions only by 1, ..., p-1.
class BernoulliTable {
 public:
  BernoulliTable(u64 p, std::vector<u64> values) : p_(p), values_(std::move(values)) {}

  u64 prime() const noexcept { return p_; }
  std::size_t size() const noexcept { return values_.size(); }
  Residue operator[](std::size_t j) const { return Residue(values_.at(j), p_, 2); }

 private:
  u64 p_;
  std::vector<u64> values_;
};

inline BernoulliTable bernoulli_mod(u64 p, BernoulliConvention convention = BernoulliConvention::seki) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("bernoulli_mod requires a prime p >= 5");
  const u64 m = p * p;
  const Modulus ring{m};
  const std::size_t count = p - 1;  // B_0 .. B_{p-2}

  std::vector<u64> denominators(count);
  for (std::size_t k = 0; k < count; ++k) denominators[k] = k + 1;
  const std::vector<u64> inverse = batch_inverse(denominators, m);  // inverse[k] = (k+1)^{-1}

  std::vector<u64> b(count, 0);
  b[0] = 1;
  // row holds C(k+1, j) mod p^2 for j = 0..k+1, advanced by Pascal's rule.
  std::vector<u64> row{1, 1};
  for (std::size_t k = 1; k < count; ++k) {
    row.push_back(1);
    for (std::size_t j = row.size() - 2; j >= 1; --j) row[j] = ring.add(row[j], row[j - 1]);
    u64 acc = convention == BernoulliConvention::seki ? (k + 1) % m : 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] != 0) acc = ring.sub(acc, ring.mul(row[j], b[j]));
    }
    b[k] = ring.mul(acc, inverse[k]);
  }
  return BernoulliTable(p, std::move(b));
}

/// Per-prime table cache, safe for concurrent use.
class BernoulliCache {
 public:
  std::shared_ptr<const BernoulliTable> get(u64 p, BernoulliConvention convention = BernoulliConvention::seki) {
    const auto key = std::make_pair(p, convention);
    {
      std::lock_guard lock(mutex_);
      if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const BernoulliTable>(bernoulli_mod(p, convention));
    std::lock_guard lock(mutex_);
    return tables_.emplace(key, std::move(table)).first->second;
  }

  static BernoulliCache& global() {
    static BernoulliCache cache;
    return cache;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<u64, BernoulliConvention>, std::shared_ptr<const BernoulliTable>> tables_;
};

/// beta_k = (B_{p-k} / k mod p^2)_p. Primes p <= k + 1 (and p <= 3) are skipped.
inline AdelicElement beta(long k, const PrimeRange& range,
                          BernoulliConvention convention = BernoulliConvention::seki,
                          BernoulliCache& cache = BernoulliCache::global()) {
  if (k < 2) throw std::invalid_argument("beta_k requires k >= 2");
  const u64 kk = static_cast<u64>(k);
  return AdelicElement::build(range, 2, [&](u64 p) {
    if (p <= 3) throw PrimeSkipped("p <= 3 excluded globally");
    if (p <= kk + 1) throw PrimeSkipped("beta_" + std::to_string(k) + " needs p > " + std::to_string(kk + 1));
    const auto table = cache.get(p, convention);
    return (*table)[p - kk] * inv(Residue(kk, p, 2));
  });
}

/// The element (p mod p^2)_p; its square is zero.
inline AdelicElement p_element(const PrimeRange& range) {
  return AdelicElement::build(range, 2, [](u64 p) { return Residue(p, p, 2); });
}

}  // namespace fmzv

#endif  // FMZV_BERNOULLI_HPP

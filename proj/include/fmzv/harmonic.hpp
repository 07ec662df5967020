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

#ifndef FMZV_HARMONIC_HPP
#define FMZV_HARMONIC_HPP

#include "fmzv/adelic.hpp"
#include "fmzv/combination.hpp"
#include "fmzv/index.hpp"
#include "fmzv/residue.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fmzv {

/// Strict sums run over n_1 < ... < n_r (zeta), star sums over
/// n_1 <= ... <= n_r (zeta-star).
enum class SumKind { strict, star };

/// Multiple harmonic sums truncated at p - 1, reduced mod p^power.
///
/// Construction batch-inverts 1, ..., p-1 once; every sum afterwards costs
/// O(p * (depth + max entry)) modular multiplications.
class HarmonicKernel {
 public:
  HarmonicKernel(u64 p, unsigned power) : p_(p), power_(power), ring_{power == 1 ? p : p * p} {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("harmonic sums require a prime p >= 5");
    if (power != 1 && power != 2) throw std::invalid_argument("modulus power must be 1 or 2");
    std::vector<u64> n(p - 1);
    for (u64 i = 0; i + 1 < p; ++i) n[i] = i + 1;
    inverses_ = batch_inverse(n, ring_.m);
  }

  u64 prime() const noexcept { return p_; }
  unsigned power() const noexcept { return power_; }

  /// Raw canonical value of the sum.
  u64 sum(const Index& index, SumKind kind) const {
    const std::size_t r = index.depth();
    if (r == 0) return 1 % ring_.m;
    const auto k = index.entries();
    const std::size_t max_exp = index.max_entry();

    // state[j] = sum over the first j summation variables with n_j <= n.
    std::vector<u64> state(r + 1, 0);
    state[0] = 1;
    std::vector<u64> powers(max_exp + 1);
    for (u64 n = 1; n < p_; ++n) {
      const u64 x = inverses_[n - 1];
      powers[1] = x;
      for (std::size_t e = 2; e <= max_exp; ++e) powers[e] = ring_.mul(powers[e - 1], x);
      if (kind == SumKind::strict) {
        // Descending j reads state[j-1] before it absorbs n: n_{j-1} < n_j.
        for (std::size_t j = r; j >= 1; --j) state[j] = ring_.add(state[j], ring_.mul(state[j - 1], powers[k[j - 1]]));
      } else {
        // Ascending j reads state[j-1] after it absorbed n: n_{j-1} <= n_j.
        for (std::size_t j = 1; j <= r; ++j) state[j] = ring_.add(state[j], ring_.mul(state[j - 1], powers[k[j - 1]]));
      }
    }
    return state[r];
  }

  Residue mhs(const Index& index, SumKind kind) const { return Residue(sum(index, kind), p_, power_); }

 private:
  u64 p_;
  unsigned power_;
  Modulus ring_;
  std::vector<u64> inverses_;
};

/// sum_{1 <= n_1 < ... < n_r <= p-1} 1 / (n_1^{k_1} ... n_r^{k_r}) mod p^power,
/// or the non-strict variant for SumKind::star. The empty index gives 1.
inline Residue mhs(const Index& index, u64 p, unsigned power, SumKind kind) {
  return HarmonicKernel(p, power).mhs(index, kind);
}

/// Direct enumeration of every tuple (n_1, ..., n_r); an independent check of
/// mhs for p <= 50 and depth <= 4.
inline Residue mhs_bruteforce(const Index& index, u64 p, unsigned power, SumKind kind) {
  if (p > 50 || index.depth() > 4) throw std::out_of_range("mhs_bruteforce is limited to p <= 50, depth <= 4");
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("harmonic sums require a prime p >= 5");
  Residue total(0, p, power);
  std::vector<u64> tuple(index.depth());
  auto visit = [&](auto&& self, std::size_t pos, u64 from) -> void {
    if (pos == tuple.size()) {
      Residue term(1, p, power);
      for (std::size_t j = 0; j < tuple.size(); ++j) term *= inv(Residue(tuple[j], p, power).pow(index[j]));
      total += term;
      return;
    }
    for (u64 n = from; n < p; ++n) {
      tuple[pos] = n;
      self(self, pos + 1, kind == SumKind::strict ? n + 1 : n);
    }
  };
  visit(visit, 0, 1);
  return total;
}

struct EvalRequest {
  IndexCombination combination;
  SumKind kind = SumKind::strict;
  PrimeRange range;
  unsigned power = 2;
};

/// The linear extension of zeta_{A_n} (or zeta*_{A_n}) to a combination of
/// indices, evaluated at every prime of the range. Primes below 5 and primes
/// dividing a coefficient denominator are reported as skipped.
inline AdelicElement eval(const EvalRequest& request) {
  return AdelicElement::build(request.range, request.power, [&](u64 p) {
    if (p <= 3) throw PrimeSkipped("p <= 3 excluded globally");
    std::vector<std::pair<const Index*, Residue>> terms;
    terms.reserve(request.combination.size());
    for (const auto& [index, c] : request.combination) {
      terms.emplace_back(&index, rational_to_residue(c, p, request.power));
    }
    Residue total(0, p, request.power);
    if (terms.empty()) return total;
    const HarmonicKernel kernel(p, request.power);
    for (const auto& [index, c] : terms) total += c * kernel.mhs(*index, request.kind);
    return total;
  });
}

inline AdelicElement eval(const IndexCombination& combination, SumKind kind, const PrimeRange& range,
                          unsigned power = 2) {
  return eval(EvalRequest{combination, kind, range, power});
}

}  // namespace fmzv

#endif  // FMZV_HARMONIC_HPP

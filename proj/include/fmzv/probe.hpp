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

#ifndef FMZV_PROBE_HPP
#define FMZV_PROBE_HPP

#include "fmzv/adelic.hpp"
#include "fmzv/bernoulli.hpp"
#include "fmzv/combination.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/identities.hpp"
#include "fmzv/rational.hpp"
#include "fmzv/residue.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmzv {

/// Smallest-height a/b with |a|, b <= bound and a = r b (mod p), found by the
/// truncated extended Euclidean algorithm. Unique whenever 2 bound^2 < p.
inline std::optional<Rational> rational_reconstruct(u64 r, u64 p, u64 bound) {
  r %= p;
  if (r == 0) return Rational(0);
  __int128 r0 = p, r1 = r, t0 = 0, t1 = 1;
  while (r1 > static_cast<__int128>(bound)) {
    const __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  const __int128 den = t1 < 0 ? -t1 : t1;
  if (den == 0 || den > static_cast<__int128>(bound)) return std::nullopt;
  if (std::gcd(static_cast<u64>(r1), static_cast<u64>(den)) != 1) return std::nullopt;
  const long long num = static_cast<long long>(t1 < 0 ? -r1 : r1);
  return Rational(BigInt(num), BigInt(static_cast<long long>(den)));
}

/// floor(cbrt(n)).
inline u64 integer_cbrt(u64 n) {
  u64 h = 0;
  while ((h + 1) * (h + 1) * (h + 1) <= n) ++h;
  return h;
}

struct ProbeRecord {
  u64 p;
  u64 value;       // the evaluated element mod p^2
  u64 quotient;    // w with value = p w, taken mod p
  u64 beta_mod_p;  // beta_k mod p
  u64 ratio;       // w / beta_k mod p
  std::optional<Rational> reconstructed;
  bool agrees = false;  // ratio matches the consensus rational
};

struct ProbeReport {
  std::string combination;
  long k = 0;
  SumKind kind = SumKind::strict;
  PrimeRange range;
  u64 threshold = 0;
  std::vector<ProbeRecord> records;
  std::vector<SkippedPrime> skipped;
  std::optional<Rational> consensus;
  std::size_t support = 0;  // primes whose own reconstruction equals the consensus
  bool consistent = false;
};

class ProbePreconditionFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::size_t kProbeMinimumSupport = 3;

/// Tests whether a combination v with vanishing A_1 image behaves like a fixed
/// rational multiple of beta_k p. At each prime the value p w (mod p^2) gives
/// w / beta_k mod p, which is reconstructed on its own with height bound
/// p^(1/3). The probe is consistent when one rational is reconstructed at three
/// or more primes and agrees with the ratio at every probed prime.
inline ProbeReport ratio_probe(const IndexCombination& v, long k, const PrimeRange& range,
                               SumKind kind = SumKind::strict) {
  if (k < 2) throw std::invalid_argument("ratio_probe requires k >= 2");
  ProbeReport report;
  report.combination = to_string(v);
  report.k = k;
  report.kind = kind;
  report.range = range;
  u64 weight = 0;
  for (const auto& [index, c] : v) weight = std::max(weight, index.weight());
  report.threshold = weight + 2;

  const AdelicElement value = eval(v, kind, range, 2);
  const AdelicElement b = beta(k, range);
  std::vector<std::string> violations;
  for (u64 p : all_primes_in(range.lo, range.hi)) {
    const auto x = value.at(p);
    const auto bk = b.at(p);
    if (p <= report.threshold) {
      report.skipped.push_back({p, "p <= weight + 2"});
      continue;
    }
    if (!x || !bk) {
      std::string reason = !x ? value.skipped().at(p) : b.skipped().at(p);
      report.skipped.push_back({p, reason});
      continue;
    }
    if (x->value() % p != 0) {
      violations.push_back(std::to_string(p));
      continue;
    }
    const u64 beta_p = bk->value() % p;
    if (beta_p == 0) {
      report.skipped.push_back({p, "beta_" + std::to_string(k) + " = 0 mod p"});
      continue;
    }
    ProbeRecord rec{};
    rec.p = p;
    rec.value = x->value();
    rec.quotient = x->value() / p;
    rec.beta_mod_p = beta_p;
    rec.ratio = (Residue(rec.quotient, p, 1) * inv(Residue(beta_p, p, 1))).value();
    rec.reconstructed = rational_reconstruct(rec.ratio, p, integer_cbrt(p));
    report.records.push_back(rec);
  }
  if (!violations.empty()) {
    std::string list;
    for (const auto& s : violations) list += (list.empty() ? "" : ",") + s;
    throw ProbePreconditionFailed("value is not divisible by p at primes " + list);
  }

  // Consensus: the most frequently reconstructed rational, earliest on ties.
  std::vector<std::pair<Rational, std::size_t>> tally;
  for (const auto& rec : report.records) {
    if (!rec.reconstructed) continue;
    auto it = std::find_if(tally.begin(), tally.end(), [&](const auto& e) { return e.first == *rec.reconstructed; });
    if (it == tally.end()) tally.emplace_back(*rec.reconstructed, 1);
    else ++it->second;
  }
  if (!tally.empty()) {
    auto best = tally.begin();
    for (auto it = tally.begin(); it != tally.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    report.consensus = best->first;
    report.support = best->second;
  }

  bool all_agree = report.consensus.has_value() && !report.records.empty();
  for (auto& rec : report.records) {
    if (!report.consensus) break;
    try {
      rec.agrees = rational_to_residue(*report.consensus, rec.p, 1).value() == rec.ratio;
    } catch (const DenominatorNotCoprime&) {
      rec.agrees = false;
    }
    all_agree = all_agree && rec.agrees;
  }
  report.consistent = all_agree && report.support >= kProbeMinimumSupport;
  return report;
}

}  // namespace fmzv

#endif  // FMZV_PROBE_HPP

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

#ifndef FMZV_ADELIC_HPP
#define FMZV_ADELIC_HPP

#include "fmzv/parallel.hpp"
#include "fmzv/rational.hpp"
#include "fmzv/residue.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fmzv {

/// Thrown by a per-prime builder to leave that prime out of an element.
class PrimeSkipped : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite stand-in for an element of A_n = prod Z/p^n / (+) Z/p^n: one residue
/// per prime of a range, except for primes recorded as skipped with a reason.
class AdelicElement {
 public:
  using Builder = std::function<Residue(u64 p)>;

  AdelicElement(PrimeRange range, unsigned power) : range_(std::move(range)), power_(power) {
    if (power != 1 && power != 2) throw std::invalid_argument("modulus power must be 1 or 2");
  }

  /// Evaluates `component` at every prime of the range (in parallel). Primes in
  /// the range's skip set, and primes whose builder throws PrimeSkipped or
  /// DenominatorNotCoprime, are recorded as skipped.
  static AdelicElement build(const PrimeRange& range, unsigned power, const Builder& component) {
    AdelicElement out(range, power);
    const std::vector<u64> primes = all_primes_in(range.lo, range.hi);
    std::vector<std::optional<Residue>> values(primes.size());
    std::vector<std::string> reasons(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
      const u64 p = primes[i];
      if (range.skip.count(p)) {
        reasons[i] = "excluded by prime range";
        return;
      }
      try {
        Residue r = component(p);
        if (r.prime() != p || r.power() != power) throw std::logic_error("builder returned a foreign residue");
        values[i] = std::move(r);
      } catch (const PrimeSkipped& e) {
        reasons[i] = e.what();
      } catch (const DenominatorNotCoprime& e) {
        reasons[i] = e.what();
      }
    });
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (values[i]) out.values_.emplace(primes[i], *values[i]);
      else out.skipped_.emplace(primes[i], reasons[i]);
    }
    return out;
  }

  static AdelicElement constant(const PrimeRange& range, unsigned power, const Rational& q) {
    return build(range, power, [&](u64 p) { return rational_to_residue(q, p, power); });
  }

  const PrimeRange& range() const noexcept { return range_; }
  unsigned power() const noexcept { return power_; }
  const std::map<u64, Residue>& values() const noexcept { return values_; }
  const std::map<u64, std::string>& skipped() const noexcept { return skipped_; }

  std::optional<Residue> at(u64 p) const {
    auto it = values_.find(p);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  /// Component-wise image in A_1.
  AdelicElement projected() const {
    AdelicElement out(range_, 1);
    for (const auto& [p, r] : values_) out.values_.emplace(p, r.project());
    out.skipped_ = skipped_;
    return out;
  }

  /// Multiplies by a rational; primes dividing its denominator become skipped.
  AdelicElement scaled(const Rational& q) const {
    AdelicElement out(range_, power_);
    out.skipped_ = skipped_;
    for (const auto& [p, r] : values_) {
      try {
        out.values_.emplace(p, r * rational_to_residue(q, p, power_));
      } catch (const DenominatorNotCoprime& e) {
        out.skipped_.emplace(p, e.what());
      }
    }
    return out;
  }

  AdelicElement& operator+=(const AdelicElement& o) { return combine(o, [](Residue& a, const Residue& b) { a += b; }); }
  AdelicElement& operator-=(const AdelicElement& o) { return combine(o, [](Residue& a, const Residue& b) { a -= b; }); }
  AdelicElement& operator*=(const AdelicElement& o) { return combine(o, [](Residue& a, const Residue& b) { a *= b; }); }
  friend AdelicElement operator+(AdelicElement a, const AdelicElement& b) { return a += b; }
  friend AdelicElement operator-(AdelicElement a, const AdelicElement& b) { return a -= b; }
  friend AdelicElement operator*(AdelicElement a, const AdelicElement& b) { return a *= b; }

 private:
  template <class Op>
  AdelicElement& combine(const AdelicElement& o, Op op) {
    if (o.power_ != power_) throw std::invalid_argument("adelic arithmetic across different moduli");
    if (o.range_.lo != range_.lo || o.range_.hi != range_.hi) {
      throw std::invalid_argument("adelic arithmetic across different prime ranges");
    }
    for (const auto& [p, reason] : o.skipped_) {
      if (!skipped_.count(p)) skipped_.emplace(p, reason);
      values_.erase(p);
    }
    for (auto it = values_.begin(); it != values_.end();) {
      auto other = o.values_.find(it->first);
      if (other == o.values_.end()) {
        it = values_.erase(it);
        continue;
      }
      op(it->second, other->second);
      ++it;
    }
    return *this;
  }

  PrimeRange range_;
  unsigned power_;
  std::map<u64, Residue> values_;
  std::map<u64, std::string> skipped_;
};

}  // namespace fmzv

#endif  // FMZV_ADELIC_HPP

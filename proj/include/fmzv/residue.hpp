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

#ifndef FMZV_RESIDUE_HPP
#define FMZV_RESIDUE_HPP

#include "fmzv/rational.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fmzv {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class NotInvertible : public std::domain_error {
 public:
  NotInvertible(std::string what, std::size_t position = 0)
      : std::domain_error(std::move(what)), position_(position) {}
  /// Offending position for batch inversion; zero otherwise.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DenominatorNotCoprime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arithmetic modulo a fixed m < 2^64 on canonical representatives.
struct Modulus {
  u64 m;

  u64 add(u64 a, u64 b) const noexcept {
    const u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (m - b); }
  u64 mul(u64 a, u64 b) const noexcept { return static_cast<u64>(static_cast<u128>(a) * b % m); }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : m - a; }
  u64 pow(u64 a, u64 e) const noexcept {
    u64 r = 1 % m;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Extended Euclid; returns false when gcd(a, m) != 1.
  bool try_inverse(u64 a, u64& out) const noexcept {
    __int128 r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const __int128 q = r0 / r1;
      __int128 tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (r0 != 1) return false;
    if (t0 < 0) t0 += m;
    out = static_cast<u64>(t0);
    return true;
  }
  /// Reduces an arbitrary (possibly negative) integer.
  u64 reduce(const BigInt& z) const {
    BigInt r = z % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
  }
};

/// An element of Z/p^n Z for n in {1, 2}, stored as its least non-negative
/// representative. p must be prime and below 2^32.
class Residue {
 public:
  Residue(u64 value, u64 p, unsigned power) : p_(p), power_(power) {
    check_modulus();
    modulus_ = power == 1 ? p : p * p;
    value_ = value % modulus_;
  }
  Residue(const BigInt& value, u64 p, unsigned power) : p_(p), power_(power) {
    check_modulus();
    modulus_ = power == 1 ? p : p * p;
    value_ = Modulus{modulus_}.reduce(value);
  }

  u64 value() const noexcept { return value_; }
  u64 prime() const noexcept { return p_; }
  unsigned power() const noexcept { return power_; }
  u64 modulus() const noexcept { return modulus_; }
  bool is_unit() const noexcept { return value_ % p_ != 0; }

  /// Image under Z/p^2 -> Z/p.
  Residue project() const { return Residue(value_ % p_, p_, 1); }

  Residue pow(u64 e) const { return with(ring().pow(value_, e)); }

  Residue& operator+=(const Residue& o) { return value_ = ring().add(value_, checked(o)), *this; }
  Residue& operator-=(const Residue& o) { return value_ = ring().sub(value_, checked(o)), *this; }
  Residue& operator*=(const Residue& o) { return value_ = ring().mul(value_, checked(o)), *this; }
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  Residue operator-() const { return with(ring().neg(value_)); }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.p_ == b.p_ && a.power_ == b.power_ && a.value_ == b.value_;
  }

  std::string str() const { return std::to_string(value_) + " (mod " + std::to_string(modulus_) + ")"; }

 private:
  void check_modulus() const {
    if (power_ != 1 && power_ != 2) throw std::invalid_argument("modulus power must be 1 or 2");
    if (p_ < 2 || p_ >= (u64{1} << 32)) throw std::invalid_argument("prime out of supported range");
  }
  Modulus ring() const noexcept { return Modulus{modulus_}; }
  Residue with(u64 v) const {
    Residue r = *this;
    r.value_ = v;
    return r;
  }
  u64 checked(const Residue& o) const {
    if (o.p_ != p_ || o.power_ != power_) {
      throw std::invalid_argument("residue arithmetic across different moduli");
    }
    return o.value_;
  }

  u64 value_ = 0;
  u64 p_ = 2;
  unsigned power_ = 1;
  u64 modulus_ = 2;
};

inline Residue inv(const Residue& a) {
  u64 out = 0;
  if (!Modulus{a.modulus()}.try_inverse(a.value(), out)) {
    throw NotInvertible(std::to_string(a.value()) + " is not invertible modulo " + std::to_string(a.modulus()));
  }
  return Residue(out, a.prime(), a.power());
}

/// Inverts every entry of `values` modulo m with one extended-Euclid call and
/// 3(len - 1) multiplications (prefix products). Throws NotInvertible naming
/// the first non-unit.
inline std::vector<u64> batch_inverse(std::span<const u64> values, u64 m) {
  const Modulus ring{m};
  std::vector<u64> prefix(values.size());
  u64 acc = 1 % m;
  for (std::size_t i = 0; i < values.size(); ++i) {
    prefix[i] = acc;
    acc = ring.mul(acc, values[i] % m);
  }
  u64 acc_inv = 0;
  if (!ring.try_inverse(acc, acc_inv)) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      u64 ignored = 0;
      if (!ring.try_inverse(values[i] % m, ignored)) {
        throw NotInvertible("element at position " + std::to_string(i) + " is not invertible modulo " +
                                std::to_string(m),
                            i);
      }
    }
  }
  std::vector<u64> out(values.size());
  for (std::size_t i = values.size(); i-- > 0;) {
    out[i] = ring.mul(acc_inv, prefix[i]);
    acc_inv = ring.mul(acc_inv, values[i] % m);
  }
  return out;
}

inline std::vector<Residue> batch_inv(std::span<const Residue> values) {
  if (values.empty()) return {};
  const u64 p = values.front().prime();
  const unsigned power = values.front().power();
  std::vector<u64> raw;
  raw.reserve(values.size());
  for (const auto& r : values) {
    if (r.prime() != p || r.power() != power) {
      throw std::invalid_argument("batch_inv requires a common modulus");
    }
    raw.push_back(r.value());
  }
  std::vector<Residue> out;
  out.reserve(values.size());
  for (u64 v : batch_inverse(raw, values.front().modulus())) out.emplace_back(v, p, power);
  return out;
}

/// num * den^{-1} in Z/p^n Z.
inline Residue rational_to_residue(const Rational& q, u64 p, unsigned power) {
  const BigInt den = boost::multiprecision::denominator(q);
  if (den % p == 0) {
    throw DenominatorNotCoprime("denominator of " + to_string(q) + " is divisible by " + std::to_string(p));
  }
  const Residue num(boost::multiprecision::numerator(q), p, power);
  return num * inv(Residue(den, p, power));
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2u, 3u, 5u, 7u}) {
    if (n % d == 0) return n == d;
  }
  for (u64 d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Inclusive range [lo, hi] of candidate primes minus an explicit skip set.
struct PrimeRange {
  u64 lo = 5;
  u64 hi = 500;
  std::set<u64> skip;

  bool contains(u64 p) const { return p >= lo && p <= hi && is_prime(p) && !skip.count(p); }
  friend bool operator==(const PrimeRange&, const PrimeRange&) = default;
};

/// Primes in [lo, hi], ignoring the skip set, ascending.
inline std::vector<u64> all_primes_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || hi < lo) return out;
  std::vector<bool> composite(hi + 1, false);
  for (u64 i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
    if (!composite[n]) out.push_back(n);
  }
  return out;
}

inline std::vector<u64> primes_in(const PrimeRange& range) {
  std::vector<u64> out;
  for (u64 p : all_primes_in(range.lo, range.hi)) {
    if (!range.skip.count(p)) out.push_back(p);
  }
  return out;
}

/// Parses "LO..HI" plus an optional comma-separated skip list.
inline PrimeRange parse_prime_range(std::string_view text, std::string_view skip_list = {}) {
  auto parse_u64 = [&](std::string_view s) -> u64 {
    if (s.empty() || s.size() > 12) throw std::invalid_argument("malformed prime range '" + std::string(text) + "'");
    u64 v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed prime range '" + std::string(text) + "'");
      v = v * 10 + static_cast<u64>(c - '0');
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw std::invalid_argument("prime range must look like LO..HI");
  PrimeRange range;
  range.lo = parse_u64(text.substr(0, dots));
  range.hi = parse_u64(text.substr(dots + 2));
  if (range.lo < 2) throw std::invalid_argument("prime range must start at 2 or above");
  if (range.hi < range.lo) throw std::invalid_argument("prime range is empty: HI < LO");
  if (range.hi >= (u64{1} << 32)) throw std::invalid_argument("primes must be below 2^32");
  std::size_t start = 0;
  while (start < skip_list.size()) {
    auto comma = skip_list.find(',', start);
    if (comma == std::string_view::npos) comma = skip_list.size();
    const u64 p = parse_u64(skip_list.substr(start, comma - start));
    if (!is_prime(p) || p < range.lo || p > range.hi) {
      throw std::invalid_argument("skip entry " + std::to_string(p) + " is not a prime inside the range");
    }
    range.skip.insert(p);
    start = comma + 1;
  }
  return range;
}

inline std::string to_string(const PrimeRange& range) {
  return std::to_string(range.lo) + ".." + std::to_string(range.hi);
}

}  // namespace fmzv

#endif  // FMZV_RESIDUE_HPP

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

#ifndef FMZV_COMBINATION_HPP
#define FMZV_COMBINATION_HPP

#include "fmzv/index.hpp"
#include "fmzv/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace fmzv {

/// A finite formal Q-linear combination of keys. Zero coefficients are never
/// stored, so two combinations are equal iff their term maps are equal.
template <class Key>
class LinearCombination {
 public:
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Rational coefficient = Rational(1)) {
    add(std::move(key), coefficient);
  }

  void add(const Key& key, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  /// Sum of all coefficients.
  Rational total() const {
    Rational s = 0;
    for (const auto& [key, c] : terms_) s += c;
    return s;
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, c] : other.terms_) add(key, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, c] : other.terms_) add(key, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  map_type terms_;
};

using IndexCombination = LinearCombination<Index>;
using WordCombination = LinearCombination<Word>;

/// Terms "c*(k_1,...,k_r)" joined by " + " in canonical order; "0" when empty.
inline std::string to_string(const IndexCombination& combination) {
  if (combination.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, c] : combination) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c) + "*(" + to_string(index) + ")";
  }
  return out;
}

inline std::string to_string(const WordCombination& combination) {
  if (combination.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, c] : combination) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c) + "*" + (word.empty() ? std::string("1") : word.str());
  }
  return out;
}

}  // namespace fmzv

#endif  // FMZV_COMBINATION_HPP

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

#ifndef FMZV_INDEX_HPP
#define FMZV_INDEX_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fmzv {

/// An index (k_1, ..., k_r) of positive integers, stored innermost first:
/// k_1 pairs with the smallest summation variable n_1.
///
/// Indices compare by depth first and lexicographically within a depth,
/// which is the canonical order used for printing combinations.
class Index {
 public:
  using value_type = std::uint32_t;

  Index() = default;
  Index(std::initializer_list<value_type> entries) : entries_(entries) { validate(); }
  explicit Index(std::vector<value_type> entries) : entries_(std::move(entries)) { validate(); }

  std::size_t depth() const noexcept { return entries_.size(); }
  std::uint64_t weight() const noexcept {
    std::uint64_t w = 0;
    for (auto k : entries_) w += k;
    return w;
  }
  bool empty() const noexcept { return entries_.empty(); }
  value_type max_entry() const noexcept {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
  }

  std::span<const value_type> entries() const noexcept { return entries_; }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Index& append(value_type k) {
    if (k == 0) throw std::invalid_argument("index entries must be positive");
    entries_.push_back(k);
    return *this;
  }
  Index& append(const Index& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    return *this;
  }

  friend Index concat(Index lhs, const Index& rhs) { return lhs.append(rhs); }

  friend bool operator==(const Index&, const Index&) = default;
  friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
    if (a.depth() != b.depth()) return a.depth() <=> b.depth();
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                  b.entries_.begin(), b.entries_.end());
  }

 private:
  void validate() const {
    if (std::find(entries_.begin(), entries_.end(), value_type{0}) != entries_.end()) {
      throw std::invalid_argument("index entries must be positive");
    }
  }

  std::vector<value_type> entries_;
};

enum class Letter : char { x = 'x', y = 'y' };

/// A word over {x, y}. Words compare by length, then lexicographically.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses a string over the characters 'x' and 'y'.
  static Word parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
      if (c == 'x') letters.push_back(Letter::x);
      else if (c == 'y') letters.push_back(Letter::y);
      else throw std::invalid_argument("word letters must be 'x' or 'y'");
    }
    return Word(std::move(letters));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(static_cast<char>(l));
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

/// (k_1, ..., k_r) -> x^{k_r - 1} y ... x^{k_1 - 1} y. The outermost entry
/// comes first in the word.
inline Word index_to_word(const Index& index) {
  std::vector<Letter> letters;
  letters.reserve(index.weight());
  for (auto it = index.entries().rbegin(); it != index.entries().rend(); ++it) {
    letters.insert(letters.end(), *it - 1, Letter::x);
    letters.push_back(Letter::y);
  }
  return Word(std::move(letters));
}

/// Inverse of index_to_word; rejects words outside Q + Q<x,y>y.
inline Index word_to_index(const Word& word) {
  if (!word.empty() && word[word.size() - 1] != Letter::y) {
    throw std::invalid_argument("word '" + word.str() + "' does not end in y");
  }
  std::vector<Index::value_type> reversed;
  Index::value_type block = 1;
  for (Letter l : word) {
    if (l == Letter::x) {
      ++block;
    } else {
      reversed.push_back(block);
      block = 1;
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return Index(std::move(reversed));
}

/// Concatenation of `copies` copies of `pattern`.
inline Index repeat(const Index& pattern, std::size_t copies) {
  Index out;
  for (std::size_t i = 0; i < copies; ++i) out.append(pattern);
  return out;
}

/// Comma-separated positive integers; whitespace is ignored and the empty
/// string is the empty index.
inline Index parse_index(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact.push_back(c);
  }
  std::vector<Index::value_type> entries;
  if (compact.empty()) return Index();
  std::size_t start = 0;
  while (true) {
    const auto comma = compact.find(',', start);
    const std::string_view field =
        std::string_view(compact).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (field.empty() || field.size() > 9 ||
        !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed index '" + std::string(text) + "'");
    }
    const auto value = static_cast<Index::value_type>(std::stoul(std::string(field)));
    if (value == 0) throw std::invalid_argument("index entries must be positive in '" + std::string(text) + "'");
    entries.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Index(std::move(entries));
}

/// "1,3,2"; the empty index formats as "".
inline std::string to_string(const Index& index) {
  std::string s;
  for (std::size_t i = 0; i < index.depth(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(index[i]);
  }
  return s;
}

}  // namespace fmzv

#endif  // FMZV_INDEX_HPP

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

#ifndef FMZV_SHUFFLE_HPP
#define FMZV_SHUFFLE_HPP

#include "fmzv/combination.hpp"
#include "fmzv/combinatorics.hpp"
#include "fmzv/index.hpp"
#include "fmzv/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fmzv {

namespace detail {

/// Multiset of all interleavings of `a` and `b`, as sequence -> multiplicity.
///
/// Dynamic program over prefix pairs: cell (i, j) holds the shuffle of a[0, i)
/// and b[0, j), obtained by appending a[i-1] to cell (i-1, j) and b[j-1] to
/// cell (i, j-1). Only two rows are kept.
template <class T>
std::map<std::vector<T>, std::uint64_t> interleavings(std::span<const T> a, std::span<const T> b) {
  using Table = std::map<std::vector<T>, std::uint64_t>;
  // Multiplicities are bounded by C(|a|+|b|, |a|) <= C(60, 30) < 2^64.
  if (a.size() + b.size() > 60) throw std::length_error("shuffle operands too long");

  auto extend = [](const Table& from, const T& letter, Table& into) {
    for (const auto& [seq, count] : from) {
      std::vector<T> next;
      next.reserve(seq.size() + 1);
      next.assign(seq.begin(), seq.end());
      next.push_back(letter);
      into[std::move(next)] += count;
    }
  };

  std::vector<Table> row(b.size() + 1);
  row[0].emplace(std::vector<T>{}, 1);
  for (std::size_t j = 1; j <= b.size(); ++j) extend(row[j - 1], b[j - 1], row[j]);

  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::vector<Table> next(b.size() + 1);
    extend(row[0], a[i - 1], next[0]);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      extend(row[j], a[i - 1], next[j]);
      extend(next[j - 1], b[j - 1], next[j]);
    }
    row = std::move(next);
  }
  return std::move(row[b.size()]);
}

}  // namespace detail

/// The shuffle product on words over {x, y}, extended bilinearly.
inline WordCombination shuffle_words(const WordCombination& u, const WordCombination& v) {
  WordCombination out;
  for (const auto& [wu, cu] : u) {
    for (const auto& [wv, cv] : v) {
      const Rational c = cu * cv;
      for (auto& [letters, count] : detail::interleavings(wu.letters(), wv.letters())) {
        out.add(Word(letters), c * count);
      }
    }
  }
  return out;
}

/// The shuffle product sh on indices, computed through the word
/// correspondence (k_1, ..., k_r) <-> x^{k_r-1}y ... x^{k_1-1}y.
/// Example: (1,2) sh (1) = 3*(1,1,2) + 1*(1,2,1).
inline IndexCombination shuffle_sh(const IndexCombination& u, const IndexCombination& v) {
  IndexCombination out;
  for (const auto& [iu, cu] : u) {
    const Word wu = index_to_word(iu);
    for (const auto& [iv, cv] : v) {
      const Word wv = index_to_word(iv);
      const Rational c = cu * cv;
      for (auto& [letters, count] : detail::interleavings(wu.letters(), wv.letters())) {
        out.add(word_to_index(Word(std::move(letters))), c * count);
      }
    }
  }
  return out;
}

inline IndexCombination shuffle_sh(const Index& u, const Index& v) {
  return shuffle_sh(IndexCombination(u), IndexCombination(v));
}

/// The shuffle that treats every index entry as a single letter.
/// Example: (2,3) ~sh (1) = (1,2,3) + (2,1,3) + (2,3,1).
inline IndexCombination shuffle_tilde(const IndexCombination& u, const IndexCombination& v) {
  IndexCombination out;
  for (const auto& [iu, cu] : u) {
    for (const auto& [iv, cv] : v) {
      const Rational c = cu * cv;
      for (auto& [entries, count] : detail::interleavings(iu.entries(), iv.entries())) {
        out.add(Index(std::move(entries)), c * count);
      }
    }
  }
  return out;
}

inline IndexCombination shuffle_tilde(const Index& u, const Index& v) {
  return shuffle_tilde(IndexCombination(u), IndexCombination(v));
}

/// ({pattern}^blocks) ~sh ({filler}^fillers).
inline IndexCombination interleave_blocks(const Index& pattern, std::size_t blocks,
                                          Index::value_type filler, std::size_t fillers) {
  return shuffle_tilde(repeat(pattern, blocks), repeat(Index{filler}, fillers));
}

/// ({1,3}^l) ~sh ({2}^m): every index ({2}^{m_0},1,{2}^{m_1},3,...,{2}^{m_{2l}})
/// with m_0 + ... + m_{2l} = m, each with coefficient one.
inline IndexCombination bb_shuffle(std::size_t l, std::size_t m) {
  return interleave_blocks(Index{1, 3}, l, 2, m);
}

/// Both sides of the expansion of 4^l (({1,3}^l) ~sh ({2}^m)) in terms of
/// ({2}^{l+m}) sh ({2}^l) and lower tilde-shuffles:
///   rhs = ({2}^{l+m}) sh ({2}^l) - sum_{k<l} 4^k C(2l+m-2k, l-k) (({1,3}^k) ~sh ({2}^{2l+m-2k})).
inline std::pair<IndexCombination, IndexCombination> muneta_sides(std::size_t l, std::size_t m) {
  const Rational four_l = Rational(BigInt(1) << (2 * l));
  IndexCombination lhs = bb_shuffle(l, m) * four_l;
  IndexCombination rhs = shuffle_sh(repeat(Index{2}, l + m), repeat(Index{2}, l));
  for (std::size_t k = 0; k < l; ++k) {
    const auto n = static_cast<std::int64_t>(2 * l + m - 2 * k);
    const Rational c = Rational(BigInt(1) << (2 * k)) * Rational(binomial(n, static_cast<std::int64_t>(l - k)));
    rhs -= bb_shuffle(k, 2 * l + m - 2 * k) * c;
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace fmzv

#endif  // FMZV_SHUFFLE_HPP

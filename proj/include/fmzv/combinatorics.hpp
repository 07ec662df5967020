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

#ifndef FMZV_COMBINATORICS_HPP
#define FMZV_COMBINATORICS_HPP

#include "fmzv/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace fmzv {

/// C(n, k) as an exact integer; zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// n! / (a! b! c!) for a + b + c = n.
inline BigInt multinomial(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != n) {
    throw std::invalid_argument("multinomial requires non-negative parts summing to n");
  }
  return binomial(n, a) * binomial(n - a, b);
}

}  // namespace fmzv

#endif  // FMZV_COMBINATORICS_HPP

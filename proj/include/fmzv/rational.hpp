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

#ifndef FMZV_RATIONAL_HPP
#define FMZV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fmzv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" for non-integers, plain "num" otherwise.
inline std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

/// Parses "num" or "num/den" with an optional leading sign on num.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline Rational power_of_two(long exponent) {
  BigInt magnitude = BigInt(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(BigInt(1), magnitude) : Rational(magnitude);
}

inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace fmzv

#endif  // FMZV_RATIONAL_HPP

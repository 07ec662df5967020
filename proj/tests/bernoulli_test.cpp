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

#include "fmzv/bernoulli.hpp"
#include "fmzv/identities.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace fmzv {
namespace {

// Akiyama-Tanigawa: an algorithm independent of the binomial recurrence. It
// produces B_1 = +1/2.
Rational akiyama_tanigawa(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

TEST(BernoulliExactTest, Examples) {
  EXPECT_EQ(bernoulli_exact(0), Rational(1));
  EXPECT_EQ(bernoulli_exact(1), Rational(1, 2));
  EXPECT_EQ(bernoulli_exact(2), Rational(1, 6));
  EXPECT_EQ(bernoulli_exact(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli_exact(3), Rational(0));
  EXPECT_EQ(bernoulli_exact(1, BernoulliConvention::classical), Rational(-1, 2));
  EXPECT_THROW(bernoulli_exact(61), std::out_of_range);
}

TEST(BernoulliExactTest, AgreesWithAkiyamaTanigawa) {
  for (unsigned n = 0; n <= 40; ++n) EXPECT_EQ(bernoulli_exact(n), akiyama_tanigawa(n)) << n;
}

TEST(BernoulliExactTest, ConventionsDifferOnlyAtOne) {
  for (unsigned n = 0; n <= 30; ++n) {
    if (n == 1) continue;
    EXPECT_EQ(bernoulli_exact(n), bernoulli_exact(n, BernoulliConvention::classical)) << n;
  }
}

TEST(BernoulliModTest, SevenExamples) {
  const BernoulliTable t = bernoulli_mod(7);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[0].value(), 1u);
  EXPECT_EQ(t[2].value(), 41u);
  EXPECT_EQ(t[4].value(), 31u);
  EXPECT_EQ(t[3].value(), 0u);
  EXPECT_EQ(t[5].value(), 0u);
  EXPECT_THROW(bernoulli_mod(3), std::invalid_argument);
  EXPECT_THROW(bernoulli_mod(9), std::invalid_argument);
}

TEST(BernoulliModTest, MatchesExactValues) {
  for (u64 p : {5ull, 7ull, 11ull, 13ull, 31ull, 61ull}) {
    for (auto convention : {BernoulliConvention::seki, BernoulliConvention::classical}) {
      const BernoulliTable t = bernoulli_mod(p, convention);
      ASSERT_EQ(t.size(), p - 1);
      for (unsigned j = 0; j + 2 <= p; ++j) {
        EXPECT_EQ(t[j], rational_to_residue(bernoulli_exact(j, convention), p, 2)) << "p=" << p << " j=" << j;
      }
    }
  }
}

TEST(BernoulliModTest, OddEntriesVanish) {
  const BernoulliTable t = bernoulli_mod(101);
  for (std::size_t j = 3; j < t.size(); j += 2) EXPECT_EQ(t[j].value(), 0u) << j;
}

TEST(BetaTest, Examples) {
  const PrimeRange r{5, 60, {}};
  EXPECT_EQ(beta(3, r).at(7)->value(), 43u);
  EXPECT_TRUE(beta(5, r).at(11).has_value());
  EXPECT_EQ(beta(5, r).at(7)->value(), 18u);
  EXPECT_FALSE(beta(5, r).at(5).has_value());
  EXPECT_EQ(beta(5, r).skipped().at(5), "beta_5 needs p > 6");
  EXPECT_FALSE(beta(6, r).at(7).has_value());
  for (long k : {2L, 4L, 6L}) {
    const auto b = beta(k, r);
    for (const auto& [p, v] : b.values()) EXPECT_EQ(v.value(), 0u) << "k=" << k << " p=" << p;
  }
  EXPECT_THROW(beta(1, r), std::invalid_argument);
}

TEST(BetaTest, FiveAtSevenFromTable) {
  const BernoulliTable t = bernoulli_mod(7);
  EXPECT_EQ((t[2] * inv(Residue(5, 7, 2))).value(), 18u);
}

TEST(BetaTest, SmallPrimesSkipped) {
  const auto b = beta(3, PrimeRange{2, 30, {}});
  EXPECT_TRUE(b.skipped().count(2));
  EXPECT_TRUE(b.skipped().count(3));
  EXPECT_EQ(b.at(5)->value(), 7u);
  EXPECT_TRUE(beta(4, PrimeRange{2, 30, {}}).skipped().count(5));
}

TEST(PElementTest, ValuesAndSquare) {
  const PrimeRange r{5, 50, {}};
  const auto p = p_element(r);
  EXPECT_EQ(p.at(7)->value(), 7u);
  EXPECT_EQ(p.at(7)->modulus(), 49u);
  EXPECT_EQ(p.at(5)->value(), 5u);
  const AdelicElement projected = p.projected();
  for (const auto& [q, v] : projected.values()) EXPECT_EQ(v.value(), 0u) << q;
  const AdelicElement square = p * p;
  for (const auto& [q, v] : square.values()) EXPECT_EQ(v.value(), 0u) << q;
}

TEST(BetaTest, OddBetaNonzeroInSample) {
  std::size_t zeros = 0, total = 0;
  for (long k : {3L, 5L, 7L, 9L, 11L, 13L}) {
    const AdelicElement b = beta(k, PrimeRange{5, 200, {}});
    for (const auto& [p, v] : b.values()) {
      ++total;
      zeros += v.value() == 0;
    }
  }
  RecordProperty("odd_beta_zero_entries", static_cast<int>(zeros));
  RecordProperty("odd_beta_entries", static_cast<int>(total));
}

TEST(BetaTest, ConventionFlipChangesNoVerdict) {
  const PrimeRange r{5, 200, {}};
  for (long k : {3L, 5L, 7L, 9L, 13L}) {
    const auto seki = beta(k, r, BernoulliConvention::seki);
    const auto classical = beta(k, r, BernoulliConvention::classical);
    EXPECT_EQ(seki.values(), classical.values()) << k;
  }
  const Registry seki = make_registry(BernoulliConvention::seki);
  const Registry classical = make_registry(BernoulliConvention::classical);
  const std::vector<std::pair<std::string, Params>> cases = {
      {"mt1", {{"l", 1}, {"m", 1}}}, {"mt2", {{"l", 2}, {"m", 0}}}, {"aaa", {{"l", 1}, {"m", 2}}},
      {"zc", {{"r", 3}}},           {"zc_star", {{"r", 2}}},        {"two_three", {{"a", 1}, {"b", 2}}}};
  for (const auto& [id, params] : cases) {
    const auto a = verify_adelic(seki, id, params, r);
    const auto b = verify_adelic(classical, id, params, r);
    EXPECT_EQ(a.pass, b.pass) << id;
    EXPECT_TRUE(a.pass) << id;
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(a.records[i].rhs, b.records[i].rhs);
  }
}

}  // namespace
}  // namespace fmzv

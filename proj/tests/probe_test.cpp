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

#include "fmzv/probe.hpp"

#include <gtest/gtest.h>

namespace fmzv {
namespace {

TEST(RationalReconstructTest, RecoversSmallFractions) {
  const u64 p = 1009;
  for (long a = -10; a <= 10; ++a) {
    for (long b = 1; b <= 10; ++b) {
      const Rational q{BigInt(a), BigInt(b)};
      const u64 r = rational_to_residue(q, p, 1).value();
      const auto back = rational_reconstruct(r, p, integer_cbrt(p));
      ASSERT_TRUE(back.has_value()) << a << "/" << b;
      EXPECT_EQ(*back, q);
    }
  }
}

TEST(RationalReconstructTest, RejectsWhenNoSmallWitness) {
  // 11 mod 1009 has no representative a/b with |a|, b <= 10.
  EXPECT_FALSE(rational_reconstruct(11, 1009, 10).has_value());
  EXPECT_EQ(rational_reconstruct(0, 1009, 10), Rational(0));
}

TEST(IntegerCbrtTest, Boundaries) {
  EXPECT_EQ(integer_cbrt(0), 0u);
  EXPECT_EQ(integer_cbrt(7), 1u);
  EXPECT_EQ(integer_cbrt(8), 2u);
  EXPECT_EQ(integer_cbrt(728), 8u);
  EXPECT_EQ(integer_cbrt(729), 9u);
  EXPECT_EQ(integer_cbrt(1000000), 100u);
}

TEST(RatioProbeTest, OneThreeIsMinusNineHalvesBetaFive) {
  const auto report = ratio_probe(IndexCombination(Index{1, 3}), 5, PrimeRange{5, 1100, {}});
  ASSERT_TRUE(report.consensus.has_value());
  EXPECT_EQ(*report.consensus, Rational(-9, 2));
  EXPECT_TRUE(report.consistent);
  EXPECT_GE(report.support, kProbeMinimumSupport);
  EXPECT_EQ(report.threshold, 6u);
  for (const auto& rec : report.records) {
    EXPECT_TRUE(rec.agrees) << rec.p;
    EXPECT_EQ(rec.value % rec.p, 0u);
  }
}

TEST(RatioProbeTest, TwoTwoTwoIsTwiceBetaSeven) {
  const auto report = ratio_probe(IndexCombination(Index{2, 2, 2}), 7, PrimeRange{5, 600, {}});
  ASSERT_TRUE(report.consensus.has_value());
  EXPECT_EQ(*report.consensus, Rational(2));
  EXPECT_TRUE(report.consistent);
}

TEST(RatioProbeTest, StarTwoTwoTwoIsTwiceBetaSeven) {
  const auto report = ratio_probe(IndexCombination(Index{2, 2, 2}), 7, PrimeRange{5, 600, {}}, SumKind::star);
  ASSERT_TRUE(report.consensus.has_value());
  EXPECT_EQ(*report.consensus, Rational(2));
  EXPECT_TRUE(report.consistent);
}

TEST(RatioProbeTest, NarrowRangeCannotReachMinusNineHalves) {
  const auto report = ratio_probe(IndexCombination(Index{1, 3}), 5, PrimeRange{5, 500, {}});
  EXPECT_FALSE(report.consistent);
}

TEST(RatioProbeTest, PreconditionFailureIsReported) {
  // zeta_A1(1, 2) does not vanish, so its values are not multiples of p.
  EXPECT_THROW(ratio_probe(IndexCombination(Index{1, 2}), 3, PrimeRange{5, 100, {}}), ProbePreconditionFailed);
}

TEST(RatioProbeTest, RejectsSmallK) {
  EXPECT_THROW(ratio_probe(IndexCombination(Index{1, 3}), 1, PrimeRange{5, 100, {}}), std::invalid_argument);
}

TEST(RatioProbeTest, DiagnosticDepthFourRuns) {
  const auto report = ratio_probe(IndexCombination(Index{1, 5, 1, 5}), 13, PrimeRange{5, 300, {}});
  EXPECT_EQ(report.threshold, 14u);
  EXPECT_FALSE(report.records.empty());
  for (const auto& s : report.skipped) {
    if (s.p > 15) {
      EXPECT_EQ(s.reason, "beta_13 = 0 mod p") << s.p;
    }
  }
}

}  // namespace
}  // namespace fmzv

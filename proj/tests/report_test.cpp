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

#include "fmzv/report.hpp"
#include "fmzv/suite.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>

namespace fmzv {
namespace {

TEST(ReportFormatTest, Parse) {
  EXPECT_EQ(parse_report_format("json"), ReportFormat::json);
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::csv);
  EXPECT_EQ(parse_report_format("text"), ReportFormat::text);
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}

TEST(JsonReportTest, RoundTripIsByteIdentical) {
  const auto report = verify(Registry::standard(), "mt1", {{"l", 1}, {"m", 0}}, PrimeRange{5, 60, {13}});
  const std::string once = to_json(report).dump();
  EXPECT_EQ(json::parse(once).dump(), once);
  const std::string pretty = to_json(report).dump(2);
  EXPECT_EQ(json::parse(pretty).dump(2), pretty);
}

TEST(JsonReportTest, AdelicFields) {
  const auto j = to_json(verify(Registry::standard(), "mt1", {{"l", 0}, {"m", 1}}, PrimeRange{7, 7, {}}));
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("kind"), "adelic-A2");
  EXPECT_EQ(j.at("params").at("m"), 1);
  ASSERT_EQ(j.at("records").size(), 1u);
  EXPECT_EQ(j.at("records")[0].at("lhs"), 14);
  EXPECT_EQ(j.at("records")[0].at("modulus"), 49);
  EXPECT_EQ(j.at("range").at("primes"), "7..7");
}

TEST(JsonReportTest, SymbolicFields) {
  const auto j = to_json(verify(Registry::standard(), "vdm2", {{"l", 1}, {"m", 0}}, PrimeRange{}));
  EXPECT_EQ(j.at("kind"), "symbolic-exact");
  EXPECT_EQ(j.at("symbolic").at("lhs"), "6");
  EXPECT_EQ(j.at("symbolic").at("equal"), true);
}

TEST(CsvReportTest, HeaderAndRows) {
  const auto csv = to_csv(verify(Registry::standard(), "mt1", {{"l", 0}, {"m", 1}}, PrimeRange{7, 11, {}}));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "id,params,p,lhs,rhs,pass,gated");
  std::getline(in, line);
  EXPECT_EQ(line, "mt1,l=0;m=1,7,14,14,true,true");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("mt1,l=0;m=1,11,", 0), 0u);
}

TEST(CsvReportTest, QuotesFieldsWithCommas) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
  const auto csv =
      to_csv(verify(Registry::standard(), "shuffle_a2", {{"left", Index{1}}, {"right", Index{1, 2}}}, PrimeRange{11, 11, {}}));
  EXPECT_NE(csv.find("shuffle_a2,\"left=(1);right=(1,2)\",11,"), std::string::npos) << csv;
}

TEST(TextReportTest, SummaryLine) {
  const auto r = verify(Registry::standard(), "zc", {{"r", 2}}, PrimeRange{5, 40, {}});
  EXPECT_EQ(summary_line(r).rfind("PASS zc [r=2] gated primes ", 0), 0u);
  EXPECT_NE(to_text(r).find("p=11"), std::string::npos);
}

TEST(SuiteConfigTest, JsonRoundTrip) {
  const std::string text = R"({
    "range": {"primes": "5..97", "skip": [13]},
    "instances": [
      {"id": "mt1", "params": {"l": 1, "m": 0}},
      {"id": "shuffle_a2", "params": {"left": "1,2", "right": ""}},
      {"id": "wolstenholme"}
    ],
    "probes": [{"index": "1,3", "k": 5, "expected": "-9/2", "gating": true}]
  })";
  const SuiteConfig config = suite_config_from_json(json::parse(text));
  EXPECT_EQ(config.range.lo, 5u);
  EXPECT_EQ(config.range.hi, 97u);
  EXPECT_EQ(config.range.skip.count(13), 1u);
  ASSERT_EQ(config.instances.size(), 3u);
  EXPECT_EQ(std::get<Index>(config.instances[1].params.at("left")), (Index{1, 2}));
  EXPECT_TRUE(std::get<Index>(config.instances[1].params.at("right")).empty());
  ASSERT_EQ(config.probes.size(), 1u);
  EXPECT_EQ(config.probes[0].expected, Rational(-9, 2));
  EXPECT_FALSE(config.probes[0].range.has_value());
  const std::string dumped = to_json(config).dump();
  EXPECT_EQ(to_json(suite_config_from_json(json::parse(dumped))).dump(), dumped);
}

TEST(SuiteConfigTest, RejectsBadEntries) {
  SuiteConfig bad;
  bad.instances.push_back({"mt1", {{"l", 0}, {"m", 0}}});
  EXPECT_THROW(validate_suite_config(bad), InvalidParams);
  SuiteConfig unknown;
  unknown.instances.push_back({"nope", {}});
  EXPECT_THROW(validate_suite_config(unknown), UnknownIdentity);
  SuiteConfig no_expected;
  no_expected.probes.push_back({Index{1, 3}, 5, SumKind::strict, std::nullopt, std::nullopt, true});
  EXPECT_THROW(validate_suite_config(no_expected), InvalidParams);
  EXPECT_THROW(params_from_json(json::parse(R"({"l": 1.5})")), InvalidParams);
}

TEST(RunSuiteTest, EmptyConfigPasses) {
  const auto report = run_suite(SuiteConfig{});
  EXPECT_TRUE(report.pass);
  EXPECT_NE(to_text(report).find("aggregate: PASS"), std::string::npos);
}

TEST(RunSuiteTest, WrongExpectedRatioFails) {
  SuiteConfig config;
  config.probes.push_back({Index{2, 2, 2}, 7, SumKind::strict, PrimeRange{5, 300, {}}, Rational(3), true});
  const auto report = run_suite(config);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(to_json(report).at("verdict"), "fail");
}

TEST(RunSuiteTest, DiagnosticPreconditionFailureDoesNotFail) {
  SuiteConfig config;
  config.probes.push_back({Index{1, 2}, 3, SumKind::strict, PrimeRange{5, 100, {}}, std::nullopt, false});
  const auto report = run_suite(config);
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.probes.size(), 1u);
  EXPECT_FALSE(report.probes[0].error.empty());
}

TEST(RunSuiteTest, SmallDefaultSuitePasses) {
  const SuiteConfig config = default_suite_config(PrimeRange{5, 120, {}}, 6);
  EXPECT_FALSE(config.instances.empty());
  const auto report = run_suite(config);
  for (const auto& r : report.identities) EXPECT_TRUE(r.pass) << summary_line(r);
  EXPECT_TRUE(report.pass);
  const std::string csv = to_csv(report);
  EXPECT_EQ(csv.rfind("id,params,p,lhs,rhs,pass,gated\n", 0), 0u);
  EXPECT_NE(csv.find("ratio_probe,\"index=(1,3);k=5\""), std::string::npos);
}

}  // namespace
}  // namespace fmzv

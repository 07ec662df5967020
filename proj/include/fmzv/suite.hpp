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

#ifndef FMZV_SUITE_HPP
#define FMZV_SUITE_HPP

#include "fmzv/identities.hpp"
#include "fmzv/index.hpp"
#include "fmzv/probe.hpp"
#include "fmzv/residue.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmzv {

struct IdentityInstance {
  std::string id;
  Params params;
};

struct ProbeInstance {
  Index index;
  long k = 2;
  SumKind kind = SumKind::strict;
  std::optional<PrimeRange> range;   // falls back to the suite range
  std::optional<Rational> expected;  // required consensus when gating
  bool gating = false;
};

struct SuiteConfig {
  PrimeRange range;
  std::vector<IdentityInstance> instances;
  std::vector<ProbeInstance> probes;
};

struct ProbeOutcome {
  ProbeInstance instance;
  ProbeReport report;
  std::string error;  // set when the precondition failed
  bool pass = false;  // consistent with the expected ratio, or non-gating
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<VerificationReport> identities;
  std::vector<ProbeOutcome> probes;
  bool pass = true;
};

/// Indices of depth at most `max_depth` and weight exactly `weight`.
inline std::vector<Index> indices_of_weight(u64 weight, std::size_t max_depth) {
  std::vector<Index> out;
  std::vector<Index::value_type> current;
  auto grow = [&](auto&& self, u64 remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (current.size() == max_depth) return;
    for (u64 k = 1; k <= remaining; ++k) {
      current.push_back(static_cast<Index::value_type>(k));
      self(self, remaining - k);
      current.pop_back();
    }
  };
  grow(grow, weight);
  return out;
}

/// Prime range of the default ratio probes.
inline PrimeRange default_probe_range() { return PrimeRange{5, 1100, {}}; }

/// Every catalogued identity at the parameter grids of the acceptance
/// criteria, plus the three ratio probes. With `max_weight`, instances of
/// larger weight are dropped (symbolic binomial identities have weight 0).
inline SuiteConfig default_suite_config(PrimeRange range = PrimeRange{5, 500, {}},
                                        std::optional<u64> max_weight = std::nullopt,
                                        const Registry& registry = Registry::standard()) {
  SuiteConfig config;
  config.range = std::move(range);
  auto push = [&](std::string id, Params params) {
    const auto& d = registry.at(id);
    if (max_weight && d.weight(params) > *max_weight) return;
    config.instances.push_back({std::move(id), std::move(params)});
  };
  using P = std::int64_t;

  for (P l = 0; l <= 4; ++l)
    for (P m = 0; m <= 5; ++m) push("muneta", {{"l", l}, {"m", m}});
  for (const char* id : {"vdm1", "vdm2"})
    for (P l = 0; l <= 40; ++l)
      for (P m = 0; m <= 40; ++m) push(id, {{"l", l}, {"m", m}});
  for (const char* id : {"mt1", "mt2"})
    for (P l = 0; 2 * l <= 5; ++l)
      for (P m = 0; 2 * l + m <= 5; ++m)
        if (2 * l + m >= 1) push(id, {{"l", l}, {"m", m}});
  for (const char* id : {"zc", "zc_star"})
    for (P r = 1; r <= 6; ++r) push(id, {{"r", r}});
  for (P a = 0; a <= 4; ++a)
    for (P b = 0; a + b <= 4; ++b) push("two_three", {{"a", a}, {"b", b}});
  for (u64 wk = 0; wk <= 6; ++wk)
    for (u64 wl = 0; wk + wl <= 6; ++wl)
      for (const Index& k : indices_of_weight(wk, 2))
        for (const Index& l : indices_of_weight(wl, 2)) push("shuffle_a2", {{"left", k}, {"right", l}});
  for (const char* id : {"aaa", "yam"})
    for (P l = 0; 2 * l <= 4; ++l)
      for (P m = 0; 2 * l + m <= 4; ++m)
        if (2 * l + m >= 1) push(id, {{"l", l}, {"m", m}});
  const P triples[3][3] = {{1, 3, 2}, {1, 5, 2}, {3, 3, 4}};
  for (const char* id : {"sw", "sw_star"})
    for (const auto& t : triples)
      for (P l = 0; l <= 3; ++l)
        for (P m = 0; l + m <= 3; ++m)
          if (l + m >= 1) push(id, {{"a", t[0]}, {"b", t[1]}, {"c", t[2]}, {"l", l}, {"m", m}});
  push("wolstenholme", {});

  auto probe = [&](Index index, long k, std::optional<Rational> expected, bool gating) {
    if (max_weight && index.weight() > *max_weight) return;
    config.probes.push_back({std::move(index), k, SumKind::strict, default_probe_range(), std::move(expected), gating});
  };
  probe(Index{1, 3}, 5, Rational(-9, 2), true);
  probe(Index{2, 2, 2}, 7, Rational(2), true);
  probe(Index{1, 5, 1, 5}, 13, std::nullopt, false);
  return config;
}

/// Checks every instance's id and parameters without computing anything.
inline void validate_suite_config(const SuiteConfig& config, const Registry& registry = Registry::standard()) {
  for (const auto& inst : config.instances) detail::check_params(registry.at(inst.id), inst.params);
  for (const auto& probe : config.probes) {
    if (probe.k < 2) throw InvalidParams("probe k must be >= 2");
    if (probe.gating && !probe.expected) throw InvalidParams("a gating probe needs an expected ratio");
  }
}

/// Runs all instances in configuration order. The aggregate passes iff every
/// identity instance passes and every gating probe reproduces its expected
/// ratio consistently.
inline SuiteReport run_suite(const SuiteConfig& config, const Registry& registry = Registry::standard()) {
  validate_suite_config(config, registry);
  SuiteReport report;
  report.config = config;
  for (const auto& inst : config.instances) {
    report.identities.push_back(verify(registry, inst.id, inst.params, config.range));
    report.pass = report.pass && report.identities.back().pass;
  }
  for (const auto& probe : config.probes) {
    ProbeOutcome outcome{probe, {}, {}, false};
    const PrimeRange range = probe.range.value_or(config.range);
    try {
      outcome.report = ratio_probe(IndexCombination(probe.index), probe.k, range, probe.kind);
      outcome.pass = !probe.gating || (outcome.report.consistent && outcome.report.consensus == probe.expected);
    } catch (const ProbePreconditionFailed& e) {
      outcome.error = e.what();
      outcome.report.combination = to_string(IndexCombination(probe.index));
      outcome.report.k = probe.k;
      outcome.report.range = range;
      outcome.pass = !probe.gating;
    }
    report.pass = report.pass && outcome.pass;
    report.probes.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace fmzv

#endif  // FMZV_SUITE_HPP

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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit status if any
// criterion fails. Everything runs on a single worker thread.

#include "fmzv.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fmzv;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<std::string> problems;

  void fail(std::string what) {
    if (problems.size() < 8) problems.push_back(std::move(what));
    else if (problems.size() == 8) problems.push_back("...");
  }
  Outcome outcome(const std::string& unit) const {
    std::ostringstream out;
    out << instances << " instances, " << checks << ' ' << unit;
    for (const auto& p : problems) out << "; " << p;
    return {problems.empty(), out.str()};
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Verifies one instance and demands a passing record at every prime in
// (lower, hi], with the expected modulus and, optionally, a vanishing lhs.
void check_adelic(Tally& tally, const std::string& id, const Params& params, u64 hi, u64 lower, unsigned power,
                  bool lhs_vanishes_mod_p = false) {
  ++tally.instances;
  const std::string label = id + " [" + to_string(params) + "]";
  VerificationReport report;
  try {
    report = verify_adelic(Registry::standard(), id, params, PrimeRange{5, hi, {}});
  } catch (const std::exception& e) {
    tally.fail(label + ": " + e.what());
    return;
  }
  std::map<u64, const PrimeRecord*> by_prime;
  for (const auto& rec : report.records) by_prime[rec.p] = &rec;
  std::map<u64, std::string> reasons;
  for (const auto& s : report.skipped) reasons[s.p] = s.reason;
  for (u64 p : all_primes_in(lower + 1, hi)) {
    auto it = by_prime.find(p);
    if (it == by_prime.end()) {
      tally.fail(label + " p=" + std::to_string(p) + " not evaluated (" + reasons[p] + ")");
      continue;
    }
    const PrimeRecord& rec = *it->second;
    ++tally.checks;
    const u64 modulus = power == 2 ? p * p : p;
    if (!rec.pass || !rec.gated || rec.lhs.modulus() != modulus) {
      tally.fail(label + " p=" + std::to_string(p) + " lhs=" + rec.lhs.str() + " rhs=" + rec.rhs.str());
    } else if (lhs_vanishes_mod_p && rec.lhs.value() % p != 0) {
      tally.fail(label + " p=" + std::to_string(p) + " lhs " + rec.lhs.str() + " not 0 mod p");
    }
  }
  if (!report.pass) tally.fail(label + ": verdict fail");
}

Outcome muneta_grid() {
  Tally t;
  for (std::int64_t l = 0; l <= 4; ++l) {
    for (std::int64_t m = 0; m <= 5; ++m) {
      ++t.instances;
      const auto r = verify_symbolic(Registry::standard(), "muneta", {{"l", l}, {"m", m}});
      ++t.checks;
      if (!r.pass) t.fail("l=" + std::to_string(l) + " m=" + std::to_string(m) + " difference " + r.symbolic->difference);
    }
  }
  return t.outcome("exact comparisons");
}

Outcome vandermonde_grid() {
  Tally t;
  for (const char* id : {"vdm1", "vdm2"}) {
    for (std::int64_t l = 0; l <= 40; ++l) {
      for (std::int64_t m = 0; m <= 40; ++m) {
        ++t.instances;
        ++t.checks;
        const auto r = verify_symbolic(Registry::standard(), id, {{"l", l}, {"m", m}});
        if (!r.pass) t.fail(std::string(id) + " l=" + std::to_string(l) + " m=" + std::to_string(m));
      }
    }
  }
  return t.outcome("exact comparisons");
}

Outcome main_theorem_grid() {
  Tally t;
  for (const char* id : {"mt1", "mt2"}) {
    for (std::int64_t l = 0; 2 * l <= 5; ++l) {
      for (std::int64_t m = 0; 2 * l + m <= 5; ++m) {
        if (2 * l + m < 1) continue;
        check_adelic(t, id, {{"l", l}, {"m", m}}, 400, static_cast<u64>(4 * l + 2 * m + 3), 2);
      }
    }
  }
  return t.outcome("prime checks mod p^2");
}

Outcome zeta_twos_grid() {
  Tally t;
  for (const char* id : {"zc", "zc_star"}) {
    for (std::int64_t r = 1; r <= 6; ++r) check_adelic(t, id, {{"r", r}}, 400, static_cast<u64>(2 * r + 3), 2);
  }
  return t.outcome("prime checks mod p^2");
}

Outcome two_three_grid() {
  Tally t;
  for (std::int64_t a = 0; a <= 4; ++a) {
    for (std::int64_t b = 0; a + b <= 4; ++b) {
      check_adelic(t, "two_three", {{"a", a}, {"b", b}}, 400, static_cast<u64>(2 * a + 2 * b + 5), 1);
    }
  }
  return t.outcome("prime checks mod p");
}

Outcome shuffle_grid() {
  Tally t;
  for (u64 wk = 0; wk <= 6; ++wk) {
    for (u64 wl = 0; wk + wl <= 6; ++wl) {
      for (const Index& k : indices_of_weight(wk, 2)) {
        for (const Index& l : indices_of_weight(wl, 2)) check_adelic(t, "shuffle_a2", {{"left", k}, {"right", l}}, 200, 8, 2);
      }
    }
  }
  return t.outcome("prime checks mod p^2");
}

Outcome aaa_yam_grid() {
  Tally t;
  for (const char* id : {"aaa", "yam"}) {
    for (std::int64_t l = 0; 2 * l <= 4; ++l) {
      for (std::int64_t m = 0; 2 * l + m <= 4; ++m) {
        if (2 * l + m < 1) continue;
        check_adelic(t, id, {{"l", l}, {"m", m}}, 300, static_cast<u64>(4 * l + 2 * m + 2), 2);
      }
    }
  }
  return t.outcome("prime checks mod p^2");
}

Outcome saito_wakabayashi_grid() {
  Tally t;
  const std::int64_t triples[3][3] = {{1, 3, 2}, {1, 5, 2}, {3, 3, 4}};
  for (const char* id : {"sw", "sw_star"}) {
    for (const auto& abc : triples) {
      for (std::int64_t l = 0; l <= 3; ++l) {
        for (std::int64_t m = 0; l + m <= 3; ++m) {
          if (l + m == 0) continue;
          const auto weight = static_cast<u64>(l * (abc[0] + abc[1]) + m * abc[2]);
          check_adelic(t, id, {{"a", abc[0]}, {"b", abc[1]}, {"c", abc[2]}, {"l", l}, {"m", m}}, 300, weight + 2, 1,
                       true);
        }
      }
    }
  }
  return t.outcome("prime checks mod p");
}

Outcome oracle_equivalence() {
  Tally t;
  for (u64 w = 0; w <= 6; ++w) {
    for (const Index& index : indices_of_weight(w, 3)) {
      ++t.instances;
      for (u64 p : {5u, 7u, 11u, 13u}) {
        for (unsigned power : {1u, 2u}) {
          for (SumKind kind : {SumKind::strict, SumKind::star}) {
            ++t.checks;
            const Residue dp = mhs(index, p, power, kind);
            const Residue brute = mhs_bruteforce(index, p, power, kind);
            if (!(dp == brute)) {
              t.fail("(" + to_string(index) + ") p=" + std::to_string(p) + " n=" + std::to_string(power) + " dp " +
                     dp.str() + " brute " + brute.str());
            }
          }
        }
      }
    }
  }
  return t.outcome("comparisons");
}

Outcome wolstenholme() {
  Tally t;
  ++t.instances;
  for (u64 p : all_primes_in(5, 1000)) {
    ++t.checks;
    const Residue v = mhs(Index{1}, p, 2, SumKind::strict);
    if (v.value() != 0) t.fail("p=" + std::to_string(p) + " gives " + v.str());
  }
  return t.outcome("primes");
}

Outcome ratio_probes() {
  std::ostringstream out;
  bool pass = true;
  auto gating = [&](const Index& index, long k, const Rational& expected) {
    const auto r = ratio_probe(IndexCombination(index), k, default_probe_range());
    const bool ok = r.consistent && r.consensus == expected && r.support >= kProbeMinimumSupport;
    pass = pass && ok;
    out << "(" << to_string(index) << ")/beta_" << k << " consensus "
        << (r.consensus ? to_string(*r.consensus) : std::string("none")) << " support " << r.support
        << (r.consistent ? " consistent" : " not consistent") << (ok ? "" : " [expected " + to_string(expected) + "]")
        << "; ";
  };
  gating(Index{1, 3}, 5, Rational(-9, 2));
  gating(Index{2, 2, 2}, 7, Rational(2));
  try {
    const auto r = ratio_probe(IndexCombination(Index{1, 5, 1, 5}), 13, default_probe_range());
    out << "diagnostic (1,5,1,5)/beta_13 consensus " << (r.consensus ? to_string(*r.consensus) : std::string("none"))
        << " support " << r.support << (r.consistent ? " consistent" : " not consistent") << " over "
        << r.records.size() << " primes";
  } catch (const ProbePreconditionFailed& e) {
    out << "diagnostic (1,5,1,5): " << e.what();
  }
  return {pass, out.str()};
}

double g_main_theorem_seconds = -1;

Outcome performance() {
  const u64 p = 99991;
  const Index index{1, 5, 1, 5};
  const auto start = Clock::now();
  const Residue v = mhs(index, p, 2, SumKind::strict);
  const double single = seconds_since(start);
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << "depth-4 mhs at p=" << p << " = " << v.str() << " in " << single << " s (limit 1 s); main theorem grid "
      << g_main_theorem_seconds << " s (limit 300 s)";
  return {single < 1.0 && g_main_theorem_seconds >= 0 && g_main_theorem_seconds < 300.0, out.str()};
}

}  // namespace

int main() {
  setenv("FMZV_THREADS", "1", 1);

  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "muneta symbolic grid", muneta_grid},
      {2, "vandermonde identities", vandermonde_grid},
      {3, "main theorem mt1/mt2",
       [] {
         const auto start = Clock::now();
         Outcome o = main_theorem_grid();
         g_main_theorem_seconds = seconds_since(start);
         return o;
       }},
      {4, "zeta({2}^r) and star", zeta_twos_grid},
      {5, "zeta_A1({2}^a,3,{2}^b)", two_three_grid},
      {6, "A_2 shuffle relation", shuffle_grid},
      {7, "aaa and yam", aaa_yam_grid},
      {8, "sw and sw_star vanish mod p", saito_wakabayashi_grid},
      {9, "DP equals brute force", oracle_equivalence},
      {10, "Wolstenholme to 1000", wolstenholme},
      {11, "ratio probes", ratio_probes},
      {12, "performance", performance},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %s %s: %s (%.2f s)\n", c.number, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

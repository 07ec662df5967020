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

// fmzv: command-line front end for finite multiple zeta values.
//
//   fmzv compute --index "1,2" --prime 11
//   fmzv shuffle --kind sh --left "1,2" --right "1"
//   fmzv verify  --id mt1 --l 1 --m 0 --primes 7..300
//   fmzv suite   --max-weight 10 --primes 5..300
//   fmzv probe   --index "1,3" --k 5 --primes 5..1100
//
// Exit status: 0 pass, 1 identity failure, 2 usage error.

#include "fmzv.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RangeOptions {
  std::string primes = "5..500";
  std::string skip;

  fmzv::PrimeRange parse() const { return fmzv::parse_prime_range(primes, skip); }
};

struct OutputOptions {
  std::string format = "text";
  std::string out;
};

void emit(const OutputOptions& opts, const std::string& body) {
  if (opts.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + opts.out + "' for writing");
  f << body;
}

template <class Report>
std::string render(const Report& report, fmzv::ReportFormat format) {
  switch (format) {
    case fmzv::ReportFormat::json:
      return fmzv::to_json(report).dump(2) + "\n";
    case fmzv::ReportFormat::csv:
      if constexpr (requires { fmzv::to_csv(report); }) return fmzv::to_csv(report);
      throw UsageError("csv output is not available for this command");
    case fmzv::ReportFormat::text:
      break;
  }
  return fmzv::to_text(report);
}

void add_range_options(CLI::App* cmd, RangeOptions& range, const std::string& default_primes) {
  range.primes = default_primes;
  cmd->add_option("--primes", range.primes, "prime range LO..HI")->capture_default_str();
  cmd->add_option("--skip", range.skip, "comma-separated primes to leave out");
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", out.out, "write the report to this file");
}

// compute -------------------------------------------------------------------

struct ComputeOptions {
  std::string index;
  std::optional<std::uint64_t> prime;
  RangeOptions range;
  unsigned power = 2;
  bool star = false;
};

int run_compute(const ComputeOptions& o, bool range_given) {
  const fmzv::Index index = fmzv::parse_index(o.index);
  const auto kind = o.star ? fmzv::SumKind::star : fmzv::SumKind::strict;
  if (o.prime) {
    if (range_given) throw UsageError("--prime and --primes are mutually exclusive");
    std::cout << fmzv::mhs(index, *o.prime, o.power, kind).str() << '\n';
    return kExitPass;
  }
  const fmzv::PrimeRange range = o.range.parse();
  const fmzv::AdelicElement value = fmzv::eval(fmzv::IndexCombination(index), kind, range, o.power);
  for (std::uint64_t p : fmzv::all_primes_in(range.lo, range.hi)) {
    if (auto v = value.at(p)) std::cout << "p=" << p << ": " << v->str() << '\n';
    else std::cout << "p=" << p << ": skipped (" << value.skipped().at(p) << ")\n";
  }
  return kExitPass;
}

// shuffle -------------------------------------------------------------------

int run_shuffle(const std::string& kind, const std::string& left, const std::string& right) {
  const fmzv::Index k = fmzv::parse_index(left);
  const fmzv::Index l = fmzv::parse_index(right);
  const fmzv::IndexCombination result = kind == "sh" ? fmzv::shuffle_sh(k, l) : fmzv::shuffle_tilde(k, l);
  std::cout << fmzv::to_string(result) << '\n';
  return kExitPass;
}

// verify --------------------------------------------------------------------

struct VerifyOptions {
  std::string id;
  std::int64_t l = 0, m = 0, r = 0, a = 0, b = 0, c = 0;
  std::string left, right;
  RangeOptions range;
  OutputOptions output;
};

int run_verify(const VerifyOptions& o, const CLI::App& cmd) {
  fmzv::Params params;
  const std::pair<const char*, std::int64_t> ints[] = {{"l", o.l}, {"m", o.m}, {"r", o.r},
                                                        {"a", o.a}, {"b", o.b}, {"c", o.c}};
  for (const auto& [name, value] : ints) {
    if (cmd.count(std::string("--") + name)) params[name] = value;
  }
  if (cmd.count("--left")) params["left"] = fmzv::parse_index(o.left);
  if (cmd.count("--right")) params["right"] = fmzv::parse_index(o.right);

  const auto format = fmzv::parse_report_format(o.output.format);
  const auto report = fmzv::verify(fmzv::Registry::standard(), o.id, params, o.range.parse());
  emit(o.output, render(report, format));
  return report.pass ? kExitPass : kExitFail;
}

// suite ---------------------------------------------------------------------

struct SuiteOptions {
  std::optional<std::uint64_t> max_weight;
  std::string config;
  RangeOptions range;
  OutputOptions output;
};

int run_suite_command(const SuiteOptions& o) {
  const auto format = fmzv::parse_report_format(o.output.format);
  const fmzv::PrimeRange range = o.range.parse();
  fmzv::SuiteConfig config;
  if (o.config.empty()) {
    config = fmzv::default_suite_config(range, o.max_weight);
  } else {
    std::ifstream in(o.config);
    if (!in) throw UsageError("cannot read config '" + o.config + "'");
    try {
      config = fmzv::suite_config_from_json(fmzv::json::parse(in), range);
    } catch (const fmzv::json::exception& e) {
      throw UsageError("malformed config '" + o.config + "': " + e.what());
    }
  }
  fmzv::validate_suite_config(config);
  const auto report = fmzv::run_suite(config);
  emit(o.output, render(report, format));
  return report.pass ? kExitPass : kExitFail;
}

// probe ---------------------------------------------------------------------

struct ProbeOptions {
  std::string index;
  long k = 0;
  std::string expect;
  bool star = false;
  RangeOptions range;
  OutputOptions output;
};

int run_probe(const ProbeOptions& o) {
  const auto format = fmzv::parse_report_format(o.output.format);
  if (format == fmzv::ReportFormat::csv) throw UsageError("csv output is not available for probe");
  const fmzv::Index index = fmzv::parse_index(o.index);
  std::optional<fmzv::Rational> expected;
  if (!o.expect.empty()) expected = fmzv::parse_rational(o.expect);
  if (o.k < 2) throw UsageError("--k must be at least 2");
  fmzv::ProbeReport report;
  try {
    report = fmzv::ratio_probe(fmzv::IndexCombination(index), o.k, o.range.parse(),
                               o.star ? fmzv::SumKind::star : fmzv::SumKind::strict);
  } catch (const fmzv::ProbePreconditionFailed& e) {
    std::cerr << "fmzv: probe precondition failed: " << e.what() << '\n';
    return kExitFail;
  }
  emit(o.output, render(report, format));
  if (expected && !(report.consistent && report.consensus == expected)) return kExitFail;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multiple zeta values modulo p and p^2"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "evaluate a multiple harmonic sum");
  compute_cmd->add_option("--index", compute.index, "comma-separated index, \"\" for the empty index")->required();
  compute_cmd->add_option("--prime", compute.prime, "a single prime");
  add_range_options(compute_cmd, compute.range, "5..500");
  compute_cmd->add_option("--power", compute.power, "modulus p^power")->check(CLI::IsMember({1u, 2u}))->capture_default_str();
  compute_cmd->add_flag("--star", compute.star, "use the star sum");

  std::string shuffle_kind = "sh", left, right;
  auto* shuffle_cmd = app.add_subcommand("shuffle", "expand a shuffle product of two indices");
  shuffle_cmd->add_option("--kind", shuffle_kind, "sh or tsh")->check(CLI::IsMember({"sh", "tsh"}))->capture_default_str();
  shuffle_cmd->add_option("--left", left)->required();
  shuffle_cmd->add_option("--right", right)->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check one identity instance");
  verify_cmd->add_option("--id", verify.id, "identity id")->required();
  verify_cmd->add_option("--l", verify.l);
  verify_cmd->add_option("--m", verify.m);
  verify_cmd->add_option("--r", verify.r);
  verify_cmd->add_option("--a", verify.a);
  verify_cmd->add_option("--b", verify.b);
  verify_cmd->add_option("--c", verify.c);
  verify_cmd->add_option("--left", verify.left, "left index");
  verify_cmd->add_option("--right", verify.right, "right index");
  add_range_options(verify_cmd, verify.range, "5..500");
  add_output_options(verify_cmd, verify.output);

  SuiteOptions suite;
  auto* suite_cmd = app.add_subcommand("suite", "run every catalogued identity and probe");
  suite_cmd->add_option("--max-weight", suite.max_weight, "drop instances above this weight");
  suite_cmd->add_option("--config", suite.config, "JSON suite configuration");
  add_range_options(suite_cmd, suite.range, "5..500");
  add_output_options(suite_cmd, suite.output);

  ProbeOptions probe;
  auto* probe_cmd = app.add_subcommand("probe", "test whether a value is a rational multiple of beta_k p");
  probe_cmd->add_option("--index", probe.index)->required();
  probe_cmd->add_option("--k", probe.k)->required();
  probe_cmd->add_option("--expect", probe.expect, "exit 1 unless this ratio is reconstructed consistently");
  probe_cmd->add_flag("--star", probe.star);
  add_range_options(probe_cmd, probe.range, "5..1100");
  add_output_options(probe_cmd, probe.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*compute_cmd) return run_compute(compute, compute_cmd->count("--primes") > 0);
    if (*shuffle_cmd) return run_shuffle(shuffle_kind, left, right);
    if (*verify_cmd) return run_verify(verify, *verify_cmd);
    if (*suite_cmd) return run_suite_command(suite);
    if (*probe_cmd) return run_probe(probe);
  } catch (const fmzv::UnknownIdentity& e) {
    std::cerr << "fmzv: unknown identity: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fmzv: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "fmzv: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "fmzv: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "fmzv: internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

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

#ifndef FMZV_REPORT_HPP
#define FMZV_REPORT_HPP

#include "fmzv/identities.hpp"
#include "fmzv/probe.hpp"
#include "fmzv/suite.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace fmzv {

using json = nlohmann::json;

enum class ReportFormat { json, csv, text };

inline ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw std::invalid_argument("unknown report format '" + name + "' (expected json, csv or text)");
}

inline std::string kind_name(SumKind kind) { return kind == SumKind::star ? "star" : "strict"; }

// ---------------------------------------------------------------------------
// JSON. nlohmann::json keeps object keys sorted, so dump() is canonical and a
// parse/dump cycle reproduces the bytes.

inline json to_json(const PrimeRange& range) {
  return json{{"primes", to_string(range)}, {"skip", std::vector<u64>(range.skip.begin(), range.skip.end())}};
}

inline PrimeRange prime_range_from_json(const json& j) {
  std::string skip;
  if (j.contains("skip")) {
    for (const auto& p : j.at("skip")) skip += (skip.empty() ? "" : ",") + std::to_string(p.get<u64>());
  }
  return parse_prime_range(j.at("primes").get<std::string>(), skip);
}

inline json to_json(const Params& params) {
  json out = json::object();
  for (const auto& [name, value] : params) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) out[name] = *i;
    else out[name] = to_string(std::get<Index>(value));
  }
  return out;
}

/// Integers become integer parameters, strings become index parameters.
inline Params params_from_json(const json& j) {
  Params params;
  for (const auto& [name, value] : j.items()) {
    if (value.is_number_integer()) params[name] = value.get<std::int64_t>();
    else if (value.is_string()) params[name] = parse_index(value.get<std::string>());
    else throw InvalidParams("parameter '" + name + "' must be an integer or an index string");
  }
  return params;
}

inline json to_json(const VerificationReport& r) {
  json out{{"id", r.id},
           {"kind", to_string(r.kind)},
           {"params", to_json(r.params)},
           {"verdict", r.pass ? "pass" : "fail"}};
  if (r.symbolic) {
    out["symbolic"] = {{"lhs", r.symbolic->lhs},
                       {"rhs", r.symbolic->rhs},
                       {"difference", r.symbolic->difference},
                       {"equal", r.symbolic->equal}};
    return out;
  }
  if (r.range) out["range"] = to_json(*r.range);
  out["threshold"] = r.threshold;
  out["gated_primes"] = r.gated_count();
  out["failures"] = r.gated_failures();
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"p", rec.p},
                       {"modulus", rec.lhs.modulus()},
                       {"lhs", rec.lhs.value()},
                       {"rhs", rec.rhs.value()},
                       {"pass", rec.pass},
                       {"gated", rec.gated}});
  }
  out["records"] = std::move(records);
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"p", s.p}, {"reason", s.reason}});
  out["skipped"] = std::move(skipped);
  return out;
}

inline json to_json(const ProbeReport& r) {
  json out{{"combination", r.combination},
           {"k", r.k},
           {"kind", kind_name(r.kind)},
           {"range", to_json(r.range)},
           {"threshold", r.threshold},
           {"support", r.support},
           {"consistent", r.consistent}};
  out["consensus"] = r.consensus ? json(to_string(*r.consensus)) : json(nullptr);
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"p", rec.p},
                       {"value", rec.value},
                       {"quotient", rec.quotient},
                       {"beta_mod_p", rec.beta_mod_p},
                       {"ratio", rec.ratio},
                       {"reconstructed", rec.reconstructed ? json(to_string(*rec.reconstructed)) : json(nullptr)},
                       {"agrees", rec.agrees}});
  }
  out["records"] = std::move(records);
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"p", s.p}, {"reason", s.reason}});
  out["skipped"] = std::move(skipped);
  return out;
}

inline json to_json(const ProbeInstance& probe) {
  json out{{"index", to_string(probe.index)},
           {"k", probe.k},
           {"star", probe.kind == SumKind::star},
           {"gating", probe.gating}};
  if (probe.range) out["range"] = to_json(*probe.range);
  if (probe.expected) out["expected"] = to_string(*probe.expected);
  return out;
}

inline ProbeInstance probe_instance_from_json(const json& j) {
  ProbeInstance probe;
  probe.index = parse_index(j.at("index").get<std::string>());
  probe.k = j.at("k").get<long>();
  probe.kind = j.value("star", false) ? SumKind::star : SumKind::strict;
  probe.gating = j.value("gating", false);
  if (j.contains("range")) probe.range = prime_range_from_json(j.at("range"));
  if (j.contains("expected")) probe.expected = parse_rational(j.at("expected").get<std::string>());
  return probe;
}

inline json to_json(const SuiteConfig& config) {
  json instances = json::array();
  for (const auto& inst : config.instances) instances.push_back({{"id", inst.id}, {"params", to_json(inst.params)}});
  json probes = json::array();
  for (const auto& probe : config.probes) probes.push_back(to_json(probe));
  return json{{"range", to_json(config.range)}, {"instances", std::move(instances)}, {"probes", std::move(probes)}};
}

/// Reads {"range": {"primes": "LO..HI", "skip": [...]}, "instances": [{"id":
/// ..., "params": {...}}], "probes": [...]}. A missing range keeps `fallback`.
inline SuiteConfig suite_config_from_json(const json& j, const PrimeRange& fallback = PrimeRange{5, 500, {}}) {
  SuiteConfig config;
  config.range = j.contains("range") ? prime_range_from_json(j.at("range")) : fallback;
  if (j.contains("instances")) {
    for (const auto& inst : j.at("instances")) {
      config.instances.push_back(
          {inst.at("id").get<std::string>(), params_from_json(inst.value("params", json::object()))});
    }
  }
  if (j.contains("probes")) {
    for (const auto& probe : j.at("probes")) config.probes.push_back(probe_instance_from_json(probe));
  }
  return config;
}

inline json to_json(const SuiteReport& report) {
  json identities = json::array();
  for (const auto& r : report.identities) identities.push_back(to_json(r));
  json probes = json::array();
  for (const auto& o : report.probes) {
    json entry{{"probe", to_json(o.instance)}, {"report", to_json(o.report)}, {"pass", o.pass}};
    if (!o.error.empty()) entry["error"] = o.error;
    probes.push_back(std::move(entry));
  }
  return json{{"config", to_json(report.config)},
              {"identities", std::move(identities)},
              {"probes", std::move(probes)},
              {"verdict", report.pass ? "pass" : "fail"}};
}

// ---------------------------------------------------------------------------
// CSV with the fixed columns id, params, p, lhs, rhs, pass, gated. Symbolic
// instances occupy one row with an empty p.

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kCsvHeader = "id,params,p,lhs,rhs,pass,gated\n";

inline void append_csv_rows(std::ostringstream& out, const VerificationReport& r) {
  const std::string params = csv_field(to_string(r.params));
  if (r.symbolic) {
    out << csv_field(r.id) << ',' << params << ",," << csv_field(r.symbolic->lhs) << ','
        << csv_field(r.symbolic->rhs) << ',' << (r.symbolic->equal ? "true" : "false") << ",true\n";
    return;
  }
  for (const auto& rec : r.records) {
    out << csv_field(r.id) << ',' << params << ',' << rec.p << ',' << rec.lhs.value() << ',' << rec.rhs.value() << ','
        << (rec.pass ? "true" : "false") << ',' << (rec.gated ? "true" : "false") << '\n';
  }
}

inline std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << kCsvHeader;
  append_csv_rows(out, r);
  return out.str();
}

/// Probe rows use id "ratio_probe": lhs is the ratio mod p, rhs the consensus
/// rational reduced mod p (empty when there is none).
inline std::string to_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << kCsvHeader;
  for (const auto& r : report.identities) append_csv_rows(out, r);
  for (const auto& o : report.probes) {
    const std::string params = csv_field("index=(" + to_string(o.instance.index) + ");k=" + std::to_string(o.instance.k));
    for (const auto& rec : o.report.records) {
      std::string rhs;
      if (o.report.consensus) {
        try {
          rhs = std::to_string(rational_to_residue(*o.report.consensus, rec.p, 1).value());
        } catch (const DenominatorNotCoprime&) {
        }
      }
      out << "ratio_probe," << params << ',' << rec.p << ',' << rec.ratio << ',' << rhs << ','
          << (rec.agrees ? "true" : "false") << ',' << (o.instance.gating ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Text.

inline std::string summary_line(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.id;
  if (!r.params.empty()) out << " [" << to_string(r.params) << "]";
  if (r.symbolic) {
    out << " exact";
    if (!r.symbolic->equal) out << ", difference " << r.symbolic->difference;
    return out.str();
  }
  out << " gated primes " << r.gated_count() << ", failures " << r.gated_failures() << ", threshold p > "
      << r.threshold;
  std::vector<u64> failing;
  for (const auto& rec : r.records) {
    if (rec.gated && !rec.pass) failing.push_back(rec.p);
  }
  if (!failing.empty()) {
    out << ", failing at";
    for (u64 p : failing) out << ' ' << p;
  }
  return out.str();
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "identity " << r.id << " (" << to_string(r.kind) << ")";
  if (!r.params.empty()) out << " [" << to_string(r.params) << "]";
  out << '\n';
  if (const auto& d = Registry::standard(); d.contains(r.id)) out << "  " << d.at(r.id).statement << '\n';
  if (r.symbolic) {
    out << "  lhs: " << r.symbolic->lhs << "\n  rhs: " << r.symbolic->rhs << "\n  lhs - rhs: " << r.symbolic->difference
        << '\n';
  } else {
    out << "  primes " << (r.range ? to_string(*r.range) : std::string("-")) << ", gating p > " << r.threshold << '\n';
    for (const auto& rec : r.records) {
      out << "  p=" << rec.p << "  lhs=" << rec.lhs.value() << "  rhs=" << rec.rhs.value() << "  (mod "
          << rec.lhs.modulus() << ")  " << (rec.pass ? "ok" : "MISMATCH") << (rec.gated ? "" : "  [not gating]") << '\n';
    }
    for (const auto& s : r.skipped) out << "  p=" << s.p << "  skipped: " << s.reason << '\n';
  }
  out << summary_line(r) << '\n';
  return out.str();
}

inline std::string to_text(const ProbeReport& r) {
  std::ostringstream out;
  out << "ratio probe: " << r.combination << " against beta_" << r.k << " p (" << kind_name(r.kind) << ")\n";
  for (const auto& rec : r.records) {
    out << "  p=" << rec.p << "  ratio=" << rec.ratio << " (mod " << rec.p << ")  reconstructed="
        << (rec.reconstructed ? to_string(*rec.reconstructed) : std::string("-")) << (rec.agrees ? "" : "  [disagrees]")
        << '\n';
  }
  out << "consensus " << (r.consensus ? to_string(*r.consensus) : std::string("none")) << ", support " << r.support
      << ", " << (r.consistent ? "consistent" : "not consistent") << " across " << r.records.size() << " primes\n";
  return out.str();
}

inline std::string to_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite over primes " << to_string(report.config.range) << '\n';
  for (const auto& r : report.identities) out << summary_line(r) << '\n';
  for (const auto& o : report.probes) {
    out << (o.pass ? "PASS " : "FAIL ") << "ratio_probe [index=(" << to_string(o.instance.index)
        << ");k=" << o.instance.k << "]" << (o.instance.gating ? "" : " (diagnostic)") << " consensus "
        << (o.report.consensus ? to_string(*o.report.consensus) : std::string("none")) << ", support "
        << o.report.support << ", " << (o.report.consistent ? "consistent" : "not consistent");
    if (!o.error.empty()) out << ", " << o.error;
    out << '\n';
  }
  std::size_t failed = 0;
  for (const auto& r : report.identities) failed += !r.pass;
  for (const auto& o : report.probes) failed += !o.pass;
  out << "aggregate: " << (report.pass ? "PASS" : "FAIL") << " (" << report.identities.size() << " identity instances, "
      << report.probes.size() << " probes, " << failed << " failing)\n";
  return out.str();
}

}  // namespace fmzv

#endif  // FMZV_REPORT_HPP

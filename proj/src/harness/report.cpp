/*
 * Copyright 2026 The privlogit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "privlogit/harness/report.hpp"

#include <charconv>
#include <sstream>

#include "privlogit/errors.hpp"

namespace privlogit::harness {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

std::string num(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, r.ptr};
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  throw ConfigError("unknown report format '" + s + "'");
}

ojson to_json(const secure::OpCounters& c) {
  ojson j = ojson::object();
  c.for_each([&](std::string_view name, uint64_t v) { j[std::string(name)] = v; });
  return j;
}

ojson to_json(const FitResult& r) {
  ojson j;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["beta"] = to_std(r.beta);
  j["likelihood_trace"] = r.likelihood_trace;
  return j;
}

ojson to_json(const protocol::ProtocolTrace& t, const EmitOptions& opts) {
  ojson j;
  j["protocol"] = t.protocol;
  j["iterations"] = t.iterations;
  j["converged"] = t.converged;
  j["beta"] = to_std(t.beta);
  if (opts.include_timing) {
    j["setup_seconds"] = t.setup_seconds;
    j["iteration_seconds"] = t.iteration_seconds;
    j["total_seconds"] = t.total_seconds;
  }
  j["counters"] = to_json(t.counters);
  j["setup_counters"] = to_json(t.setup_counters);
  j["node_encryptions"] = t.node_encryptions;
  j["node_scalar_muls"] = t.node_scalar_muls;
  ojson traffic = ojson::array();
  for (const auto& [pair, stat] : t.traffic)
    traffic.push_back({{"from", protocol::to_string(pair.first)},
                       {"to", protocol::to_string(pair.second)},
                       {"bytes", stat.bytes},
                       {"messages", stat.messages}});
  j["traffic"] = traffic;
  return j;
}

ojson to_json(const BenchReport& r, const EmitOptions& opts) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["dataset"] = {{"descriptor", r.dataset}, {"n", r.n}, {"p", r.p}};
  j["config"] = {{"nodes", r.nodes},   {"seed", r.seed},         {"lambda", r.lambda},
                 {"tol", r.tol},       {"key_bits", r.key_bits}};
  if (opts.include_timing) j["keygen_seconds"] = r.keygen_seconds;
  ojson methods = ojson::array();
  for (const auto& e : r.entries) {
    ojson m;
    m["method"] = method_name(e.method);
    m["ok"] = e.ok;
    if (!e.ok) m["error"] = e.error;
    m["iterations"] = e.iterations;
    m["converged"] = e.converged;
    if (opts.include_timing) {
      m["setup_seconds"] = e.setup_seconds;
      m["total_seconds"] = e.total_seconds;
      m["speedup_vs_secure_newton"] = e.speedup ? ojson(*e.speedup) : ojson(nullptr);
    }
    m["r2_vs_newton"] = e.r2_vs_newton ? ojson(*e.r2_vs_newton) : ojson(nullptr);
    m["op_counters"] = to_json(e.counters);
    m["bytes"] = e.bytes;
    m["beta"] = to_std(e.beta);
    methods.push_back(std::move(m));
  }
  j["methods"] = std::move(methods);
  return j;
}

BenchReport report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion)
      throw ParseError("unsupported report schema version");
    BenchReport r;
    r.dataset = j.at("dataset").at("descriptor").get<std::string>();
    r.n = j.at("dataset").at("n").get<Eigen::Index>();
    r.p = j.at("dataset").at("p").get<Eigen::Index>();
    const auto& c = j.at("config");
    r.nodes = c.at("nodes").get<int>();
    r.seed = c.at("seed").get<uint64_t>();
    r.lambda = c.at("lambda").get<double>();
    r.tol = c.at("tol").get<double>();
    r.key_bits = c.at("key_bits").get<int>();
    r.keygen_seconds = j.value("keygen_seconds", 0.0);
    for (const auto& m : j.at("methods")) {
      MethodEntry e;
      e.method = parse_method(m.at("method").get<std::string>());
      e.ok = m.at("ok").get<bool>();
      e.error = m.value("error", std::string());
      e.iterations = m.at("iterations").get<int>();
      e.converged = m.at("converged").get<bool>();
      e.setup_seconds = m.value("setup_seconds", 0.0);
      e.total_seconds = m.value("total_seconds", 0.0);
      if (m.contains("speedup_vs_secure_newton") && !m["speedup_vs_secure_newton"].is_null())
        e.speedup = m["speedup_vs_secure_newton"].get<double>();
      if (!m.at("r2_vs_newton").is_null()) e.r2_vs_newton = m["r2_vs_newton"].get<double>();
      const auto& oc = m.at("op_counters");
      e.counters.encryptions = oc.at("encryptions");
      e.counters.adds = oc.at("adds");
      e.counters.subs = oc.at("subs");
      e.counters.scalar_muls = oc.at("scalar_muls");
      e.counters.sec_muls = oc.at("sec_muls");
      e.counters.truncates = oc.at("truncates");
      e.counters.divs = oc.at("divs");
      e.counters.sqrts = oc.at("sqrts");
      e.counters.signs = oc.at("signs");
      e.counters.reveals = oc.at("reveals");
      e.counters.choleskys = oc.at("choleskys");
      e.counters.back_substitutions = oc.at("back_substitutions");
      e.counters.inversions = oc.at("inversions");
      e.counters.decryptions_at_b = oc.at("decryptions_at_b");
      e.counters.bytes_exchanged = oc.at("bytes_exchanged");
      e.counters.rounds = oc.at("rounds");
      e.bytes = m.at("bytes").get<uint64_t>();
      const auto beta = m.at("beta").get<std::vector<double>>();
      e.beta = Eigen::Map<const Vector>(beta.data(), static_cast<Eigen::Index>(beta.size()));
      r.entries.push_back(std::move(e));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string emit(const BenchReport& r, ReportFormat format, const EmitOptions& opts) {
  if (format == ReportFormat::kJson) return to_json(r, opts).dump(2) + "\n";

  std::ostringstream out;
  out << "method,ok,iterations,converged,r2_vs_newton";
  if (opts.include_timing) out << ",setup_seconds,total_seconds,speedup_vs_secure_newton";
  secure::OpCounters{}.for_each([&](std::string_view name, uint64_t) { out << ',' << name; });
  out << ",bytes,beta,error\n";
  for (const auto& e : r.entries) {
    out << method_name(e.method) << ',' << (e.ok ? 1 : 0) << ',' << e.iterations << ','
        << (e.converged ? 1 : 0) << ',' << (e.r2_vs_newton ? num(*e.r2_vs_newton) : "");
    if (opts.include_timing)
      out << ',' << num(e.setup_seconds) << ',' << num(e.total_seconds) << ','
          << (e.speedup ? num(*e.speedup) : "");
    e.counters.for_each([&](std::string_view, uint64_t v) { out << ',' << v; });
    out << ',' << e.bytes << ',';
    for (Eigen::Index i = 0; i < e.beta.size(); ++i) out << (i ? ";" : "") << num(e.beta(i));
    out << ',' << csv_field(e.error) << '\n';
  }
  return out.str();
}

}  // namespace privlogit::harness

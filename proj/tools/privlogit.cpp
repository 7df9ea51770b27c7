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

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>

#include "exit_codes.hpp"
#include "privlogit/core/optimizer.hpp"
#include "privlogit/crypto/paillier.hpp"
#include "privlogit/crypto/wire.hpp"
#include "privlogit/errors.hpp"
#include "privlogit/harness/bench.hpp"
#include "privlogit/harness/csv.hpp"
#include "privlogit/harness/report.hpp"
#include "privlogit/harness/simulate.hpp"
#include "privlogit/protocol/node.hpp"
#include "privlogit/protocol/server_a.hpp"
#include "privlogit/protocol/server_b.hpp"
#include "privlogit/protocol/session.hpp"
#include "privlogit/protocol/tcp_transport.hpp"

namespace fs = std::filesystem;
using namespace privlogit;

namespace {

constexpr const char* kKeyMagic = "privlogit-key-v1";

// Exactly one data source is used: CSV paths, a simulation triple, or the
// Wine Quality files.
struct DataFlags {
  std::vector<std::string> paths;
  std::string simulate;
  std::optional<std::string> wine;
  std::string response;
  std::string binarize;
  bool no_header = false;
  bool standardize = false;
  bool intercept = false;

  void add(CLI::App& app) {
    auto* data = app.add_option("--data", paths, "CSV file(s), concatenated row-wise");
    auto* sim = app.add_option("--simulate", simulate, "Synthetic data as n,p,seed");
    auto* w = app.add_option("--wine", wine, "Wine Quality directory (red and white files)")
                  ->expected(0, 1);
    data->excludes(sim)->excludes(w);
    sim->excludes(w);
    app.add_option("--response", response, "Response column name or index (default: last)");
    app.add_option("--binarize", binarize, "Response rule, e.g. '>=6'");
    app.add_flag("--no-header", no_header, "CSV files have no header row");
    app.add_flag("--standardize", standardize, "z-score every covariate");
    app.add_flag("--intercept", intercept, "Prepend a column of ones");
  }

  std::string descriptor() const {
    if (!simulate.empty()) return "simulate:" + simulate;
    if (wine) return "wine";
    std::string out = "csv:";
    for (size_t i = 0; i < paths.size(); ++i) out += (i ? "," : "") + paths[i];
    return out;
  }

  Dataset load() const {
    if (!simulate.empty()) return harness::simulate(harness::SimSpec::parse(simulate));
    if (wine) return harness::load_wine(wine->empty() ? harness::default_wine_dir() : *wine).data;
    if (paths.empty()) throw ConfigError("no data: pass --data, --simulate or --wine");
    harness::CsvSpec spec;
    spec.paths = paths;
    spec.has_header = !no_header;
    if (!response.empty()) spec.response_column = response;
    spec.standardize = standardize;
    spec.add_intercept = intercept;
    if (!binarize.empty()) spec.binarize = harness::BinarizeRule::parse(binarize);
    return harness::load_csv(spec).data;
  }
};

struct SessionFlags {
  protocol::SessionConfig cfg;
  std::string protocol = "privlogit-hessian";
  double timeout_s = 30.0;
  std::string key_path;

  void add(CLI::App& app, bool with_protocol) {
    if (with_protocol)
      app.add_option("--protocol", protocol, "privlogit-hessian | privlogit-local | secure-newton")
          ->capture_default_str();
    app.add_option("--nodes", cfg.s_nodes, "Number of data nodes")->capture_default_str();
    app.add_option("--lambda", cfg.lambda, "L2 penalty")->capture_default_str();
    app.add_option("--tol", cfg.tol, "Relative log-likelihood tolerance")->capture_default_str();
    app.add_option("--max-iter", cfg.max_iter, "Iteration cap")->capture_default_str();
    app.add_option("--key-bits", cfg.key_bits, "Paillier modulus size")->capture_default_str();
    app.add_option("--frac-bits", cfg.frac_bits, "Fixed-point fraction bits")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Session seed")->capture_default_str();
    app.add_option("--key", key_path, "Private key file from 'keygen'");
    app.add_option("--timeout", timeout_s, "Receive timeout in seconds")->capture_default_str();
  }

  protocol::SessionConfig config() const {
    protocol::SessionConfig c = cfg;
    c.protocol = protocol::parse_protocol(protocol);
    c.validate();
    return c;
  }

  std::chrono::milliseconds timeout() const {
    if (!(timeout_s > 0)) throw ConfigError("--timeout must be positive");
    return std::chrono::milliseconds(static_cast<int64_t>(timeout_s * 1000));
  }
};

void write_bytes(const fs::path& path, const wire::Bytes& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

wire::Bytes read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

paillier::KeyPair load_key(const std::string& path) {
  const wire::Bytes bytes = read_bytes(path);
  wire::Reader r(bytes);
  if (r.string() != kKeyMagic) throw ParseError(path + " is not a private key file");
  auto kp = paillier::read_private(r);
  r.expect_done();
  return kp;
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot write " + out);
  f << text;
}

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// ---- subcommands ----

int cmd_fit(const DataFlags& data, const std::string& method, const protocol::SessionConfig& c,
            const std::string& out) {
  const Dataset d = data.load();
  const ModelConfig m = c.model();
  FitResult r;
  if (method == "newton") r = newton_fit(d, m);
  else if (method == "privlogit") r = privlogit_fit(d, m);
  else throw ConfigError("unknown optimizer '" + method + "' (newton | privlogit)");
  auto j = harness::to_json(r);
  j["optimizer"] = method;
  emit_text(json_text(j), out);
  return r.converged ? cli::kOk : cli::kDivergence;
}

int cmd_keygen(int bits, const std::string& dir, std::optional<uint64_t> seed) {
  Rng rng(seed ? *seed : std::random_device{}() ^ (uint64_t{std::random_device{}()} << 32));
  const auto kp = paillier::keygen(bits, rng);
  fs::create_directories(dir);
  wire::Writer priv;
  priv.string(kKeyMagic);
  paillier::write_private(priv, kp);
  write_bytes(fs::path(dir) / "private.key", priv.bytes());
  fs::permissions(fs::path(dir) / "private.key", fs::perms::owner_read | fs::perms::owner_write);
  wire::Writer pub;
  pub.string(kKeyMagic);
  paillier::write_public(pub, kp.pub);
  write_bytes(fs::path(dir) / "public.key", pub.bytes());
  std::cout << "wrote " << kp.pub.bits() << "-bit key to " << dir << "\n";
  return cli::kOk;
}

int cmd_simulate(const harness::SimSpec& spec, const std::string& out) {
  if (spec.n < spec.p || spec.p < 1) throw ConfigError("need n >= p >= 1");
  harness::write_csv(harness::simulate(spec), out);
  return cli::kOk;
}

int cmd_bench(const DataFlags& data, const SessionFlags& sf, const std::string& methods,
              const std::string& transport, uint64_t partition_seed, const std::string& format,
              bool no_timing, const std::string& out) {
  harness::BenchConfig cfg;
  cfg.session = sf.cfg;
  cfg.session.validate();
  cfg.methods = harness::parse_methods(methods);
  cfg.partition_seed = partition_seed;
  cfg.options.transport = protocol::parse_transport(transport);
  cfg.options.timeout = sf.timeout();
  if (!sf.key_path.empty()) cfg.options.key = load_key(sf.key_path);
  const auto fmt = harness::parse_format(format);
  const auto rep = harness::bench(data.load(), data.descriptor(), cfg);
  emit_text(harness::emit(rep, fmt, {!no_timing}), out);
  for (const auto& e : rep.entries)
    if (!e.ok) std::cerr << harness::method_name(e.method) << ": " << e.error << "\n";
  return cli::kOk;
}

struct RoleFlags {
  std::string role = "all";
  std::string transport = "inproc";
  std::string listen = "127.0.0.1:7700";
  std::string connect = "127.0.0.1:7700";
  int node_index = 0;
  uint64_t partition_seed = 0;
  bool whole_file = false;
  bool deterministic = false;
};

Rng role_rng(const RoleFlags& rf, const protocol::SessionConfig& c, const protocol::PartyId& id) {
  if (rf.deterministic) return protocol::party_rng(c.seed, id);
  std::random_device rd;
  return Rng((uint64_t{rd()} << 32) ^ rd());
}

int cmd_secure_run(const DataFlags& data, const SessionFlags& sf, const RoleFlags& rf,
                   const std::string& out) {
  const protocol::SessionConfig c = sf.config();
  const auto timeout = sf.timeout();
  const auto sid = c.session_id();

  if (rf.role == "all") {
    protocol::SessionOptions opts;
    opts.transport = protocol::parse_transport(rf.transport);
    opts.timeout = timeout;
    if (opts.transport == protocol::TransportKind::kTcp) opts.address = rf.listen;
    if (!sf.key_path.empty()) opts.key = load_key(sf.key_path);
    const auto parts = harness::partition(data.load(), c.s_nodes, rf.partition_seed);
    const auto res = protocol::run_session(c, parts, opts);
    emit_text(json_text(harness::to_json(res.trace)), out);
    return res.trace.converged ? cli::kOk : cli::kDivergence;
  }

  if (rf.role == "server-a") {
    protocol::TcpHub hub(rf.listen, sid, timeout);
    std::vector<protocol::PartyId> peers{protocol::PartyId::server_b()};
    for (int j = 1; j <= c.s_nodes; ++j) peers.push_back(protocol::PartyId::node(static_cast<uint16_t>(j)));
    std::cerr << "server A listening on port " << hub.port() << "\n";
    try {
      hub.accept_peers(peers);
    } catch (const std::exception& e) {
      for (const auto& p : peers) hub.abort(p, {protocol::AbortCode::kProtocol, e.what()});
      throw;
    }
    protocol::ServerA a(c, hub, role_rng(rf, c, protocol::PartyId::server_a()));
    const auto trace = a.run();
    emit_text(json_text(harness::to_json(trace)), out);
    return trace.converged ? cli::kOk : cli::kDivergence;
  }

  if (rf.role == "server-b") {
    if (sf.key_path.empty() && !rf.deterministic)
      throw ConfigError("server-b needs --key (or --deterministic)");
    const paillier::KeyPair key =
        sf.key_path.empty() ? protocol::session_key(c) : load_key(sf.key_path);
    protocol::TcpClient ep(rf.connect, protocol::PartyId::server_b(), sid, timeout);
    protocol::ServerB b(c, key, ep, role_rng(rf, c, protocol::PartyId::server_b()));
    b.run();
    std::cerr << "server B answered " << b.requests_served() << " requests\n";
    return cli::kOk;
  }

  if (rf.role == "node") {
    if (rf.node_index < 1 || rf.node_index > c.s_nodes)
      throw ConfigError("--node-index must be in 1.." + std::to_string(c.s_nodes));
    const Dataset all = data.load();
    const Dataset mine =
        rf.whole_file ? all
                      : harness::partition(all, c.s_nodes, rf.partition_seed)[static_cast<size_t>(rf.node_index - 1)];
    const auto id = protocol::PartyId::node(static_cast<uint16_t>(rf.node_index));
    protocol::TcpClient ep(rf.connect, id, sid, timeout);
    protocol::Node node(c, mine, ep, role_rng(rf, c, id));
    const auto r = node.run();
    nlohmann::ordered_json j;
    j["node"] = rf.node_index;
    j["rows"] = mine.rows();
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["beta"] = std::vector<double>(r.beta.data(), r.beta.data() + r.beta.size());
    emit_text(json_text(j), out);
    return r.converged ? cli::kOk : cli::kDivergence;
  }
  throw ConfigError("unknown role '" + rf.role + "' (all | server-a | server-b | node)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-preserving logistic regression over horizontally partitioned data"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "privlogit 0.1.0");

  // fit
  DataFlags fit_data;
  SessionFlags fit_session;
  std::string fit_optimizer = "newton", fit_out;
  auto* fit = app.add_subcommand("fit", "Plaintext fit on pooled data");
  fit_data.add(*fit);
  fit->add_option("--optimizer", fit_optimizer, "newton | privlogit")->capture_default_str();
  fit->add_option("--lambda", fit_session.cfg.lambda, "L2 penalty")->capture_default_str();
  fit->add_option("--tol", fit_session.cfg.tol, "Relative log-likelihood tolerance")->capture_default_str();
  fit->add_option("--max-iter", fit_session.cfg.max_iter, "Iteration cap")->capture_default_str();
  fit->add_option("--out", fit_out, "Output file (default stdout)");

  // secure-run
  DataFlags run_data;
  SessionFlags run_session;
  RoleFlags roles;
  std::string run_out;
  auto* run = app.add_subcommand("secure-run", "Run a secure protocol");
  run_data.add(*run);
  run_session.add(*run, true);
  run->add_option("--role", roles.role, "all | server-a | server-b | node")->capture_default_str();
  run->add_option("--transport", roles.transport, "inproc | tcp (role 'all' only)")->capture_default_str();
  run->add_option("--listen", roles.listen, "Server A address")->capture_default_str();
  run->add_option("--connect", roles.connect, "Server A address to dial")->capture_default_str();
  run->add_option("--node-index", roles.node_index, "1-based node index (role 'node')");
  run->add_option("--partition-seed", roles.partition_seed, "Row shuffle seed")->capture_default_str();
  run->add_flag("--local-data", roles.whole_file, "Use the whole data source as this node's rows");
  run->add_flag("--deterministic", roles.deterministic,
                "Derive party randomness (and a missing key) from --seed; testing only");
  run->add_option("--out", run_out, "Output file (default stdout)");

  // bench
  DataFlags bench_data;
  SessionFlags bench_session;
  std::string bench_methods = "all", bench_transport = "inproc", bench_format = "json", bench_out;
  uint64_t bench_partition_seed = 0;
  bool no_timing = false;
  auto* bn = app.add_subcommand("bench", "Compare plaintext and secure methods");
  bench_data.add(*bn);
  bench_session.add(*bn, false);
  bn->add_option("--methods", bench_methods, "'all' or a comma-separated list")->capture_default_str();
  bn->add_option("--transport", bench_transport, "inproc | tcp")->capture_default_str();
  bn->add_option("--partition-seed", bench_partition_seed, "Row shuffle seed")->capture_default_str();
  bn->add_option("--format", bench_format, "json | csv")->capture_default_str();
  bn->add_flag("--no-timing", no_timing, "Omit wall-clock fields");
  bn->add_option("--out", bench_out, "Output file (default stdout)");

  // keygen
  int kg_bits = 2048;
  std::string kg_dir = "keys";
  std::optional<uint64_t> kg_seed;
  auto* kg = app.add_subcommand("keygen", "Generate a Paillier key pair");
  kg->add_option("--bits", kg_bits, "Modulus size")->capture_default_str();
  kg->add_option("--out", kg_dir, "Output directory")->capture_default_str();
  kg->add_option("--seed", kg_seed, "Deterministic seed (testing only)");

  // simulate
  harness::SimSpec sim_spec;
  std::string sim_out;
  auto* sim = app.add_subcommand("simulate", "Write a synthetic data set as CSV");
  sim->add_option("--n", sim_spec.n, "Samples")->required();
  sim->add_option("--p", sim_spec.p, "Features")->required();
  sim->add_option("--seed", sim_spec.seed, "Seed")->capture_default_str();
  sim->add_option("--out", sim_out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfig;
  }

  try {
    if (*fit) return cmd_fit(fit_data, fit_optimizer, fit_session.cfg, fit_out);
    if (*run) return cmd_secure_run(run_data, run_session, roles, run_out);
    if (*bn)
      return cmd_bench(bench_data, bench_session, bench_methods, bench_transport, bench_partition_seed,
                       bench_format, no_timing, bench_out);
    if (*kg) return cmd_keygen(kg_bits, kg_dir, kg_seed);
    if (*sim) return cmd_simulate(sim_spec, sim_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(std::current_exception());
  }
  return cli::kFailure;
}

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

#include "privlogit/protocol/session.hpp"

#include <exception>
#include <functional>
#include <memory>
#include <thread>

#include "privlogit/errors.hpp"
#include "privlogit/protocol/messages.hpp"
#include "privlogit/protocol/server_a.hpp"
#include "privlogit/protocol/server_b.hpp"
#include "privlogit/protocol/tcp_transport.hpp"

namespace privlogit::protocol {

TransportKind parse_transport(const std::string& s) {
  if (s == "inproc") return TransportKind::kInProc;
  if (s == "tcp") return TransportKind::kTcp;
  throw ConfigError("unknown transport '" + s + "'");
}

Rng party_rng(uint64_t seed, const PartyId& party) {
  const uint64_t stream = (static_cast<uint64_t>(party.role) << 16 | party.index) + 16;
  return Rng(seed).fork(stream);
}

paillier::KeyPair session_key(const SessionConfig& cfg) {
  Rng rng = Rng(cfg.seed).fork(1);
  return paillier::keygen(cfg.key_bits, rng);
}

namespace {

struct Outcome {
  std::exception_ptr error;
  bool peer_abort = false;

  void capture() {
    error = std::current_exception();
    try {
      throw;
    } catch (const PeerAborted&) {
      peer_abort = true;
    } catch (...) {
    }
  }
};

// Runs `a_body` as server A on the calling thread and every other party on
// its own thread.
template <class ABody>
auto host(const SessionConfig& cfg, const std::vector<Dataset>& parts, const SessionOptions& opts,
          SessionResult& out, const paillier::KeyPair& key, ABody&& a_body) {
  cfg.validate();
  if (static_cast<int>(parts.size()) != cfg.s_nodes)
    throw ConfigError("expected " + std::to_string(cfg.s_nodes) + " partitions, got " +
                      std::to_string(parts.size()));

  const SessionId sid = cfg.session_id();
  auto stats = std::make_shared<TrafficStats>();
  std::unique_ptr<InProcNetwork> net;
  std::unique_ptr<Endpoint> a_ep;
  TcpHub* hub = nullptr;
  std::string connect_to;
  if (opts.transport == TransportKind::kInProc) {
    net = std::make_unique<InProcNetwork>(sid, opts.timeout);
    stats = net->shared_stats();
    a_ep = net->endpoint(PartyId::server_a());
  } else {
    auto h = std::make_unique<TcpHub>(opts.address, sid, opts.timeout, stats);
    auto [host_name, port] = parse_address(opts.address);
    if (host_name.empty() || host_name == "0.0.0.0") host_name = "127.0.0.1";
    if (host_name == "::") host_name = "::1";
    connect_to = (host_name.find(':') != std::string::npos ? "[" + host_name + "]" : host_name) +
                 ":" + std::to_string(h->port());
    hub = h.get();
    a_ep = std::move(h);
  }
  auto make_endpoint = [&](const PartyId& id) -> std::unique_ptr<Endpoint> {
    if (net) return net->endpoint(id);
    return std::make_unique<TcpClient>(connect_to, id, sid, opts.timeout, stats);
  };

  const size_t s = parts.size();
  out.nodes.assign(s, {});
  std::vector<Outcome> outcomes(s + 1);
  std::vector<std::thread> threads;
  threads.emplace_back([&] {
    try {
      auto ep = make_endpoint(PartyId::server_b());
      ServerB b(cfg, key, *ep, party_rng(cfg.seed, PartyId::server_b()));
      b.set_record_transcript(opts.record_transcript);
      b.run();
      out.transcript = b.key_holder().transcript();
      out.requests_at_b = b.requests_served();
    } catch (...) {
      outcomes[0].capture();
    }
  });
  for (size_t j = 0; j < s; ++j) {
    threads.emplace_back([&, j] {
      const PartyId id = PartyId::node(static_cast<uint16_t>(j + 1));
      try {
        auto ep = make_endpoint(id);
        Node node(cfg, parts[j], *ep, party_rng(cfg.seed, id));
        out.nodes[j] = node.run();
      } catch (...) {
        outcomes[j + 1].capture();
      }
    });
  }

  using Result = decltype(a_body(std::declval<ServerA&>()));
  std::optional<Result> result;
  Outcome a_outcome;
  try {
    if (hub) {
      std::vector<PartyId> peers{PartyId::server_b()};
      for (size_t j = 1; j <= s; ++j) peers.push_back(PartyId::node(static_cast<uint16_t>(j)));
      try {
        hub->accept_peers(peers);
      } catch (const std::exception& e) {
        const AbortInfo info{AbortCode::kProtocol, e.what()};
        for (const auto& p : peers) hub->abort(p, info);
        throw;
      }
    }
    ServerA a(cfg, *a_ep, party_rng(cfg.seed, PartyId::server_a()));
    result = a_body(a);
  } catch (...) {
    a_outcome.capture();
  }
  for (auto& t : threads) t.join();

  if (a_outcome.error && !a_outcome.peer_abort) std::rethrow_exception(a_outcome.error);
  for (const auto& o : outcomes)
    if (o.error && !o.peer_abort) std::rethrow_exception(o.error);
  if (a_outcome.error) std::rethrow_exception(a_outcome.error);
  for (const auto& o : outcomes)
    if (o.error) std::rethrow_exception(o.error);

  if (net) out.trace.traffic = net->stats().snapshot();
  else out.trace.traffic = stats->snapshot();
  return std::move(*result);
}

}  // namespace

SessionResult run_session(const SessionConfig& cfg, const std::vector<Dataset>& parts,
                          const SessionOptions& opts) {
  const paillier::KeyPair key = opts.key ? *opts.key : session_key(cfg);
  SessionResult out;
  ProtocolTrace trace = host(cfg, parts, opts, out, key, [](ServerA& a) { return a.run(); });
  trace.traffic = std::move(out.trace.traffic);
  for (const auto& n : out.nodes) {
    trace.node_encryptions += n.encryptions;
    trace.node_scalar_muls += n.scalar_muls;
  }
  out.trace = std::move(trace);
  return out;
}

SetupResult run_setup_only(const SessionConfig& cfg, const std::vector<Dataset>& parts,
                           const SessionOptions& opts) {
  if (cfg.protocol == ProtocolKind::kSecureNewton)
    throw ConfigError("the Newton baseline has no setup phase");
  const paillier::KeyPair key = opts.key ? *opts.key : session_key(cfg);
  SessionResult scratch;
  return host(cfg, parts, opts, scratch, key, [&](ServerA& a) {
    a.handshake();
    return run_guarded(a.endpoint(), a.peers(), [&] {
      SetupResult r{a.setup_once(), key, a.backend().params(), {}};
      r.counters = a.backend().counters();
      a.finish(Vector::Zero(a.features()), false, 0);
      return r;
    });
  });
}

}  // namespace privlogit::protocol

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

#ifndef PRIVLOGIT_PROTOCOL_SESSION_HPP_
#define PRIVLOGIT_PROTOCOL_SESSION_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "privlogit/core/dataset.hpp"
#include "privlogit/crypto/paillier.hpp"
#include "privlogit/protocol/node.hpp"
#include "privlogit/protocol/session_config.hpp"
#include "privlogit/protocol/trace.hpp"
#include "privlogit/secure/backend.hpp"
#include "privlogit/secure/key_holder.hpp"

namespace privlogit::protocol {

enum class TransportKind { kInProc, kTcp };

TransportKind parse_transport(const std::string& s);

struct SessionOptions {
  TransportKind transport = TransportKind::kInProc;
  // Listening address of server A for the socket transport; port 0 picks a
  // free port.
  std::string address = "127.0.0.1:0";
  std::chrono::milliseconds timeout = kDefaultTimeout;
  // Session key; generated from the configuration seed when absent.
  std::optional<paillier::KeyPair> key;
  // Keep server B's per-request transcript (memory grows with rounds).
  bool record_transcript = false;
};

// Per-party randomness derived from the session seed. Seeded sessions are
// reproducible and meant for testing: every party could recompute every
// other party's masks.
Rng party_rng(uint64_t seed, const PartyId& party);
paillier::KeyPair session_key(const SessionConfig& cfg);

struct SessionResult {
  ProtocolTrace trace;
  std::vector<NodeResult> nodes;
  // Server B's view, when SessionOptions::record_transcript is set.
  std::vector<secure::TranscriptEntry> transcript;
  uint64_t requests_at_b = 0;
};

// Hosts server A, server B and one node per partition, each on its own
// thread, and runs cfg.protocol to completion. The first failure aborts
// every party and is rethrown here (peer notifications are not).
SessionResult run_session(const SessionConfig& cfg, const std::vector<Dataset>& parts,
                          const SessionOptions& opts = {});

struct SetupResult {
  secure::CipherMatrix factor;  // Enc(L), (−H̃) = L Lᵀ
  paillier::KeyPair key;
  FixedPointParams params;
  secure::OpCounters counters;
};

// Handshake and SetupOnce only, then the session is closed.
SetupResult run_setup_only(const SessionConfig& cfg, const std::vector<Dataset>& parts,
                           const SessionOptions& opts = {});

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_SESSION_HPP_

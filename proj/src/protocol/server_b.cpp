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

#include "privlogit/protocol/server_b.hpp"

#include "privlogit/errors.hpp"
#include "privlogit/protocol/messages.hpp"

namespace privlogit::protocol {

ServerB::ServerB(SessionConfig cfg, paillier::KeyPair kp, Endpoint& ep, Rng rng)
    : cfg_(std::move(cfg)), ep_(ep), holder_(std::move(kp), std::move(rng)) {
  cfg_.validate();
  if (ep_.self() != PartyId::server_b()) throw ConfigError("server B endpoint has the wrong identity");
  if (static_cast<int>(holder_.public_key().bits()) != cfg_.key_bits)
    throw ConfigError("key size differs from the session configuration");
  // The session can run for thousands of rounds; keep only the counters.
  holder_.set_record_transcript(false);
}

void ServerB::run() {
  run_guarded(ep_, {PartyId::server_a()}, [&] { serve(); });
}

void ServerB::serve() {
  const PartyId a = PartyId::server_a();
  ep_.send(a, MsgType::kHello, encode_hello({cfg_.hash(), 0, holder_.public_key()}));
  const ConfigAck ack = decode_config_ack(expect(ep_, a, MsgType::kConfigAck).payload);
  if (!(ack.public_key == holder_.public_key())) throw ProtocolAbort("server A echoed a different key");

  for (;;) {
    const Envelope e = ep_.recv(a);
    if (e.type == MsgType::kConvergedNotice) return;
    if (e.type != MsgType::kBlindedRequest)
      throw ProtocolAbort(std::string("server B received unexpected ") + msg_name(e.type));
    ep_.send(a, MsgType::kBlindedResponse, holder_.handle(e.payload));
    ++served_;
  }
}

}  // namespace privlogit::protocol

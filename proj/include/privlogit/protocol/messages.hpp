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

#ifndef PRIVLOGIT_PROTOCOL_MESSAGES_HPP_
#define PRIVLOGIT_PROTOCOL_MESSAGES_HPP_

#include <array>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "privlogit/core/dataset.hpp"
#include "privlogit/crypto/paillier.hpp"
#include "privlogit/errors.hpp"
#include "privlogit/protocol/transport.hpp"

namespace privlogit::protocol {

struct Hello {
  std::array<uint8_t, 32> config_hash{};
  // Feature count; nodes only (0 for server B).
  uint16_t features = 0;
  // Server B announces the session public key.
  std::optional<paillier::PublicKey> public_key;
};

wire::Bytes encode_hello(const Hello& h);
Hello decode_hello(std::span<const uint8_t> payload);

struct ConfigAck {
  paillier::PublicKey public_key;
  uint16_t features = 0;
};

wire::Bytes encode_config_ack(const ConfigAck& a);
ConfigAck decode_config_ack(std::span<const uint8_t> payload);

struct ConvergedNotice {
  bool converged = false;
  uint32_t iterations = 0;
  Vector beta;
};

wire::Bytes encode_converged(const ConvergedNotice& c);
ConvergedNotice decode_converged(std::span<const uint8_t> payload);

wire::Bytes encode_beta(const Vector& beta);
Vector decode_beta(std::span<const uint8_t> payload, Eigen::Index expected);

// A block of ciphertexts with an expected shape; ParseError otherwise.
wire::Bytes encode_cipher_block(uint16_t rows, uint16_t cols,
                                std::span<const paillier::Ciphertext> cs);
std::vector<paillier::Ciphertext> decode_cipher_block(std::span<const uint8_t> payload,
                                                      uint16_t rows, uint16_t cols);

// Receives from `from` and checks the type; anything else is a protocol
// violation.
Envelope expect(Endpoint& ep, const PartyId& from, MsgType type);

// Abort code that best describes an exception.
AbortCode abort_code_for(const std::exception& e);

// Runs one party's body. Malformed payloads become ProtocolAbort; on any
// failure every peer except the one that aborted us gets an Abort, and the
// exception propagates.
template <class F>
auto run_guarded(Endpoint& ep, const std::vector<PartyId>& peers, F&& body) {
  std::optional<PartyId> origin;
  try {
    try {
      return body();
    } catch (const ParseError& e) {
      throw ProtocolAbort(std::string("malformed payload: ") + e.what());
    }
  } catch (const PeerAborted& e) {
    for (const auto& p : peers)
      if (p != e.from()) ep.abort(p, e.info());
    throw;
  } catch (const std::exception& e) {
    const AbortInfo info{abort_code_for(e), to_string(ep.self()) + ": " + e.what()};
    for (const auto& p : peers) ep.abort(p, info);
    throw;
  }
}

// Packed upper triangle, row-major: p(p+1)/2 entries.
size_t packed_size(Eigen::Index p);

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_MESSAGES_HPP_

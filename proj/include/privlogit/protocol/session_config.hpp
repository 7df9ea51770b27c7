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

#ifndef PRIVLOGIT_PROTOCOL_SESSION_CONFIG_HPP_
#define PRIVLOGIT_PROTOCOL_SESSION_CONFIG_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "privlogit/core/optimizer.hpp"
#include "privlogit/crypto/fixed_point.hpp"
#include "privlogit/crypto/wire.hpp"
#include "privlogit/protocol/party.hpp"

namespace privlogit::protocol {

enum class ProtocolKind : uint8_t { kPrivLogitHessian = 1, kPrivLogitLocal = 2, kSecureNewton = 3 };

const char* protocol_name(ProtocolKind k);
// Accepts the CLI spellings: privlogit-hessian, privlogit-local, secure-newton.
ProtocolKind parse_protocol(const std::string& s);

// Everything the parties must agree on. The fixed-point modulus is not part
// of it: it comes from the key holder's public key at handshake time.
struct SessionConfig {
  static constexpr int kMinNodes = 2;
  static constexpr int kMaxNodes = 64;

  int s_nodes = 4;
  double lambda = 0.0;
  double tol = 1e-6;
  int max_iter = 500;
  int frac_bits = 32;
  int int_bits = 64;
  int stat_sec_bits = 40;
  int key_bits = 2048;
  ProtocolKind protocol = ProtocolKind::kPrivLogitHessian;
  uint64_t seed = 0;

  // Throws ConfigError.
  void validate() const;

  ModelConfig model() const;
  FixedPointParams fixed_point(const mpz_class& modulus) const;

  wire::Bytes encode() const;
  static SessionConfig decode(std::span<const uint8_t> bytes);

  // SHA-256 of encode(); exchanged in the handshake.
  std::array<uint8_t, 32> hash() const;
  // Derived from the hash, so independently started parties agree on it.
  SessionId session_id() const;
};

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_SESSION_CONFIG_HPP_

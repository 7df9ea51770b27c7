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

#include "privlogit/protocol/session_config.hpp"

#include <openssl/sha.h>

#include <algorithm>

#include "privlogit/crypto/paillier.hpp"
#include "privlogit/errors.hpp"

namespace privlogit::protocol {

const char* protocol_name(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::kPrivLogitHessian:
      return "privlogit-hessian";
    case ProtocolKind::kPrivLogitLocal:
      return "privlogit-local";
    case ProtocolKind::kSecureNewton:
      return "secure-newton";
  }
  return "?";
}

ProtocolKind parse_protocol(const std::string& s) {
  for (auto k : {ProtocolKind::kPrivLogitHessian, ProtocolKind::kPrivLogitLocal,
                 ProtocolKind::kSecureNewton})
    if (s == protocol_name(k)) return k;
  throw ConfigError("unknown protocol '" + s + "'");
}

void SessionConfig::validate() const {
  if (s_nodes < kMinNodes || s_nodes > kMaxNodes)
    throw ConfigError("node count must be in [" + std::to_string(kMinNodes) + ", " +
                      std::to_string(kMaxNodes) + "]");
  if (!paillier::supported_key_bits(key_bits))
    throw ConfigError("unsupported key size " + std::to_string(key_bits));
  if (frac_bits < 1 || int_bits < 1 || stat_sec_bits < 1)
    throw ConfigError("fixed-point widths must be positive");
  if (protocol != ProtocolKind::kPrivLogitHessian && protocol != ProtocolKind::kPrivLogitLocal &&
      protocol != ProtocolKind::kSecureNewton)
    throw ConfigError("unknown protocol");
  model().validate();
}

ModelConfig SessionConfig::model() const {
  ModelConfig m;
  m.lambda = lambda;
  m.tol = tol;
  m.max_iter = max_iter;
  return m;
}

FixedPointParams SessionConfig::fixed_point(const mpz_class& modulus) const {
  FixedPointParams p;
  p.frac_bits = frac_bits;
  p.int_bits = int_bits;
  p.stat_sec_bits = stat_sec_bits;
  p.modulus = modulus;
  p.validate();
  return p;
}

wire::Bytes SessionConfig::encode() const {
  wire::Writer w;
  w.u16(static_cast<uint16_t>(s_nodes));
  w.f64(lambda);
  w.f64(tol);
  w.u32(static_cast<uint32_t>(max_iter));
  w.u16(static_cast<uint16_t>(frac_bits));
  w.u16(static_cast<uint16_t>(int_bits));
  w.u16(static_cast<uint16_t>(stat_sec_bits));
  w.u16(static_cast<uint16_t>(key_bits));
  w.u8(static_cast<uint8_t>(protocol));
  w.u64(seed);
  return std::move(w).take();
}

SessionConfig SessionConfig::decode(std::span<const uint8_t> bytes) {
  wire::Reader r(bytes);
  SessionConfig c;
  c.s_nodes = r.u16();
  c.lambda = r.f64();
  c.tol = r.f64();
  c.max_iter = static_cast<int>(r.u32());
  c.frac_bits = r.u16();
  c.int_bits = r.u16();
  c.stat_sec_bits = r.u16();
  c.key_bits = r.u16();
  c.protocol = static_cast<ProtocolKind>(r.u8());
  c.seed = r.u64();
  r.expect_done();
  return c;
}

std::array<uint8_t, 32> SessionConfig::hash() const {
  const wire::Bytes b = encode();
  std::array<uint8_t, 32> out{};
  SHA256(b.data(), b.size(), out.data());
  return out;
}

SessionId SessionConfig::session_id() const {
  wire::Bytes b = encode();
  const char tag[] = "session-id";
  b.insert(b.end(), tag, tag + sizeof tag - 1);
  std::array<uint8_t, 32> digest{};
  SHA256(b.data(), b.size(), digest.data());
  SessionId id{};
  std::copy_n(digest.begin(), id.size(), id.begin());
  return id;
}

}  // namespace privlogit::protocol

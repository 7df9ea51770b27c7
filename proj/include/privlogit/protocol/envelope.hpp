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

#ifndef PRIVLOGIT_PROTOCOL_ENVELOPE_HPP_
#define PRIVLOGIT_PROTOCOL_ENVELOPE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "privlogit/core/dataset.hpp"
#include "privlogit/crypto/paillier.hpp"
#include "privlogit/crypto/wire.hpp"
#include "privlogit/protocol/party.hpp"

namespace privlogit::protocol {

enum class MsgType : uint8_t {
  kHello = 1,
  kConfigAck = 2,
  kLocalHessian = 3,
  kLocalGradient = 4,
  kLocalLogLik = 5,
  kLocalNewtonStep = 6,
  kBlindedRequest = 7,
  kBlindedResponse = 8,
  kBetaBroadcast = 9,
  kInvHessianBroadcast = 10,
  kConvergedNotice = 11,
  kAbort = 12,
};

const char* msg_name(MsgType t);

// Frame layout, all integers big-endian:
//   version u8 | session [16] | from role u8, index u16 | to role u8, index u16
//   | msg_type u8 | payload length u32 | payload
struct Envelope {
  static constexpr uint8_t kVersion = 0x01;
  static constexpr size_t kHeaderSize = 1 + 16 + 3 + 3 + 1 + 4;
  static constexpr uint32_t kMaxPayload = 1u << 30;

  uint8_t version = kVersion;
  SessionId session{};
  PartyId from;
  PartyId to;
  MsgType type = MsgType::kAbort;
  wire::Bytes payload;
};

wire::Bytes encode_envelope(const Envelope& e);

// Header fields only; `payload` is left empty. Returns the payload length.
// Throws ParseError on a bad version, role or message type.
uint32_t decode_header(std::span<const uint8_t> header, Envelope& out);

// Whole frame. Throws ParseError when the length prefix disagrees with the
// bytes present or any header field is invalid.
Envelope decode_envelope(std::span<const uint8_t> frame);

// Payload codecs. Matrices are u16 rows, u16 cols, then row-major entries.
void write_vector(wire::Writer& w, const Vector& v);
Vector read_vector(wire::Reader& r);
void write_ciphertexts(wire::Writer& w, uint16_t rows, uint16_t cols,
                       std::span<const paillier::Ciphertext> cs);
// Returns the entries; rows/cols land in the out-parameters.
std::vector<paillier::Ciphertext> read_ciphertexts(wire::Reader& r, uint16_t& rows,
                                                   uint16_t& cols);

// Abort payload: reason code plus free text.
enum class AbortCode : uint8_t { kProtocol = 1, kConfig = 2, kDiverged = 3, kNotPositiveDefinite = 4 };

struct AbortInfo {
  AbortCode code = AbortCode::kProtocol;
  std::string reason;
};

wire::Bytes encode_abort(const AbortInfo& a);
AbortInfo decode_abort(std::span<const uint8_t> payload);

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_ENVELOPE_HPP_

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

#include "privlogit/protocol/envelope.hpp"

#include <algorithm>

#include "privlogit/errors.hpp"

namespace privlogit::protocol {

std::string to_string(const PartyId& p) {
  switch (p.role) {
    case Role::kNode:
      return "node" + std::to_string(p.index);
    case Role::kServerA:
      return "server-a";
    case Role::kServerB:
      return "server-b";
  }
  return "unknown";
}

SessionId random_session_id(Rng& rng) {
  SessionId id{};
  for (size_t i = 0; i < id.size(); i += 8) {
    uint64_t w = rng.next_u64();
    for (size_t k = 0; k < 8; ++k) id[i + k] = static_cast<uint8_t>(w >> (8 * k));
  }
  return id;
}

const char* msg_name(MsgType t) {
  switch (t) {
    case MsgType::kHello: return "Hello";
    case MsgType::kConfigAck: return "ConfigAck";
    case MsgType::kLocalHessian: return "LocalHessian";
    case MsgType::kLocalGradient: return "LocalGradient";
    case MsgType::kLocalLogLik: return "LocalLogLik";
    case MsgType::kLocalNewtonStep: return "LocalNewtonStep";
    case MsgType::kBlindedRequest: return "BlindedRequest";
    case MsgType::kBlindedResponse: return "BlindedResponse";
    case MsgType::kBetaBroadcast: return "BetaBroadcast";
    case MsgType::kInvHessianBroadcast: return "InvHessianBroadcast";
    case MsgType::kConvergedNotice: return "ConvergedNotice";
    case MsgType::kAbort: return "Abort";
  }
  return "?";
}

namespace {

void write_party(wire::Writer& w, const PartyId& p) {
  w.u8(static_cast<uint8_t>(p.role));
  w.u16(p.index);
}

PartyId read_party(wire::Reader& r) {
  const uint8_t role = r.u8();
  if (role > static_cast<uint8_t>(Role::kServerB)) throw ParseError("unknown party role");
  PartyId p{static_cast<Role>(role), r.u16()};
  if ((p.role == Role::kNode) != (p.index != 0)) throw ParseError("bad party index");
  return p;
}

}  // namespace

wire::Bytes encode_envelope(const Envelope& e) {
  if (e.payload.size() > Envelope::kMaxPayload) throw DimensionError("envelope payload too large");
  wire::Writer w;
  w.u8(e.version);
  w.raw(e.session);
  write_party(w, e.from);
  write_party(w, e.to);
  w.u8(static_cast<uint8_t>(e.type));
  w.u32(static_cast<uint32_t>(e.payload.size()));
  w.raw(e.payload);
  return std::move(w).take();
}

uint32_t decode_header(std::span<const uint8_t> header, Envelope& out) {
  if (header.size() != Envelope::kHeaderSize) throw ParseError("short envelope header");
  wire::Reader r(header);
  out.version = r.u8();
  if (out.version != Envelope::kVersion)
    throw ParseError("unsupported envelope version " + std::to_string(out.version));
  const auto sid = r.raw(16);
  std::copy(sid.begin(), sid.end(), out.session.begin());
  out.from = read_party(r);
  out.to = read_party(r);
  const uint8_t type = r.u8();
  if (type < static_cast<uint8_t>(MsgType::kHello) || type > static_cast<uint8_t>(MsgType::kAbort))
    throw ParseError("unknown message type " + std::to_string(type));
  out.type = static_cast<MsgType>(type);
  const uint32_t len = r.u32();
  if (len > Envelope::kMaxPayload) throw ParseError("envelope payload too large");
  return len;
}

Envelope decode_envelope(std::span<const uint8_t> frame) {
  if (frame.size() < Envelope::kHeaderSize) throw ParseError("truncated envelope header");
  Envelope e;
  const uint32_t len = decode_header(frame.first(Envelope::kHeaderSize), e);
  const auto body = frame.subspan(Envelope::kHeaderSize);
  if (body.size() != len)
    throw ParseError("envelope length prefix " + std::to_string(len) + " but " +
                     std::to_string(body.size()) + " payload bytes");
  e.payload.assign(body.begin(), body.end());
  return e;
}

void write_vector(wire::Writer& w, const Vector& v) {
  if (v.size() > 0xFFFF) throw DimensionError("vector too long for the wire format");
  w.u16(static_cast<uint16_t>(v.size()));
  w.u16(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) w.f64(v(i));
}

Vector read_vector(wire::Reader& r) {
  const uint16_t rows = r.u16();
  if (r.u16() != 1) throw ParseError("expected a column vector");
  Vector v(rows);
  for (uint16_t i = 0; i < rows; ++i) v(i) = r.f64();
  return v;
}

void write_ciphertexts(wire::Writer& w, uint16_t rows, uint16_t cols,
                       std::span<const paillier::Ciphertext> cs) {
  if (cs.size() != size_t{rows} * cols) throw DimensionError("ciphertext block shape mismatch");
  w.u16(rows);
  w.u16(cols);
  for (const auto& c : cs) w.bigint(c.c);
}

std::vector<paillier::Ciphertext> read_ciphertexts(wire::Reader& r, uint16_t& rows,
                                                   uint16_t& cols) {
  rows = r.u16();
  cols = r.u16();
  const size_t n = size_t{rows} * cols;
  // Each entry needs at least its 4-byte length prefix.
  if (n * 4 > r.remaining()) throw ParseError("ciphertext block larger than payload");
  std::vector<paillier::Ciphertext> out(n);
  for (auto& c : out) c.c = r.bigint();
  return out;
}

wire::Bytes encode_abort(const AbortInfo& a) {
  wire::Writer w;
  w.u8(static_cast<uint8_t>(a.code));
  w.string(a.reason);
  return std::move(w).take();
}

AbortInfo decode_abort(std::span<const uint8_t> payload) {
  try {
    wire::Reader r(payload);
    AbortInfo a;
    const uint8_t code = r.u8();
    a.code = code >= 1 && code <= 4 ? static_cast<AbortCode>(code) : AbortCode::kProtocol;
    a.reason = r.string();
    return a;
  } catch (const ParseError&) {
    return {AbortCode::kProtocol, "unreadable abort payload"};
  }
}

}  // namespace privlogit::protocol

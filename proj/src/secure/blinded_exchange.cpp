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

#include "privlogit/secure/blinded_exchange.hpp"

#include "privlogit/errors.hpp"

namespace privlogit::secure {

namespace {

OpKind read_kind(wire::Reader& r) {
  const uint8_t k = r.u8();
  if (k < 1 || k > 6) throw ParseError("unknown blinded op kind " + std::to_string(k));
  return static_cast<OpKind>(k);
}

}  // namespace

size_t arity(OpKind kind) { return kind == OpKind::kMul || kind == OpKind::kDiv ? 2 : 1; }

const char* op_name(OpKind kind) {
  switch (kind) {
    case OpKind::kMul: return "mul";
    case OpKind::kTruncate: return "truncate";
    case OpKind::kDiv: return "div";
    case OpKind::kSqrt: return "sqrt";
    case OpKind::kSign: return "sign";
    case OpKind::kReveal: return "reveal";
  }
  return "?";
}

wire::Bytes encode_request(const BlindedRequest& req) {
  if (req.operands.size() % arity(req.kind) != 0)
    throw DimensionError("blinded request: operand count not a multiple of arity");
  wire::Writer w;
  w.u8(static_cast<uint8_t>(req.kind));
  w.u16(req.shift);
  w.u32(static_cast<uint32_t>(req.items()));
  for (const auto& c : req.operands) w.bigint(c.c);
  return std::move(w).take();
}

BlindedRequest decode_request(std::span<const uint8_t> bytes) {
  wire::Reader r(bytes);
  BlindedRequest req;
  req.kind = read_kind(r);
  req.shift = r.u16();
  const size_t n = size_t{r.u32()} * arity(req.kind);
  // Each bigint takes at least its 4-byte length prefix.
  if (n > r.remaining() / 4) throw ParseError("blinded request: item count exceeds payload");
  req.operands.reserve(n);
  for (size_t i = 0; i < n; ++i) req.operands.push_back({r.bigint()});
  r.expect_done();
  return req;
}

wire::Bytes encode_response(const BlindedResponse& resp) {
  wire::Writer w;
  w.u8(static_cast<uint8_t>(resp.kind));
  w.u8(static_cast<uint8_t>(resp.status));
  if (resp.status != Status::kOk) {
    w.string(resp.error);
    return std::move(w).take();
  }
  switch (resp.kind) {
    case OpKind::kSign:
      w.u32(static_cast<uint32_t>(resp.bits.size()));
      for (bool b : resp.bits) w.u8(b ? 1 : 0);
      break;
    case OpKind::kReveal:
      w.u32(static_cast<uint32_t>(resp.residues.size()));
      for (const auto& v : resp.residues) w.bigint(v);
      break;
    default:
      w.u32(static_cast<uint32_t>(resp.ciphertexts.size()));
      for (const auto& c : resp.ciphertexts) w.bigint(c.c);
  }
  return std::move(w).take();
}

BlindedResponse decode_response(std::span<const uint8_t> bytes) {
  wire::Reader r(bytes);
  BlindedResponse resp;
  resp.kind = read_kind(r);
  const uint8_t status = r.u8();
  if (status > 2) throw ParseError("blinded response: bad status byte");
  resp.status = static_cast<Status>(status);
  if (resp.status != Status::kOk) {
    resp.error = r.string();
    r.expect_done();
    return resp;
  }
  const uint32_t n = r.u32();
  if (n > r.remaining()) throw ParseError("blinded response: item count exceeds payload");
  switch (resp.kind) {
    case OpKind::kSign:
      resp.bits.reserve(n);
      for (uint32_t i = 0; i < n; ++i) {
        const uint8_t b = r.u8();
        if (b > 1) throw ParseError("blinded response: bad sign byte");
        resp.bits.push_back(b == 1);
      }
      break;
    case OpKind::kReveal:
      resp.residues.reserve(n);
      for (uint32_t i = 0; i < n; ++i) resp.residues.push_back(r.bigint());
      break;
    default:
      resp.ciphertexts.reserve(n);
      for (uint32_t i = 0; i < n; ++i) resp.ciphertexts.push_back({r.bigint()});
  }
  r.expect_done();
  return resp;
}

}  // namespace privlogit::secure

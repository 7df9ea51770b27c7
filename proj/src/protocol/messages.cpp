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

#include "privlogit/protocol/messages.hpp"

#include <algorithm>

#include "privlogit/errors.hpp"

namespace privlogit::protocol {

wire::Bytes encode_hello(const Hello& h) {
  wire::Writer w;
  w.raw(h.config_hash);
  w.u16(h.features);
  w.u8(h.public_key ? 1 : 0);
  if (h.public_key) paillier::write_public(w, *h.public_key);
  return std::move(w).take();
}

Hello decode_hello(std::span<const uint8_t> payload) {
  wire::Reader r(payload);
  Hello h;
  const auto hash = r.raw(h.config_hash.size());
  std::copy(hash.begin(), hash.end(), h.config_hash.begin());
  h.features = r.u16();
  if (r.u8() != 0) h.public_key = paillier::read_public(r);
  r.expect_done();
  return h;
}

wire::Bytes encode_config_ack(const ConfigAck& a) {
  wire::Writer w;
  paillier::write_public(w, a.public_key);
  w.u16(a.features);
  return std::move(w).take();
}

ConfigAck decode_config_ack(std::span<const uint8_t> payload) {
  wire::Reader r(payload);
  ConfigAck a;
  a.public_key = paillier::read_public(r);
  a.features = r.u16();
  r.expect_done();
  return a;
}

wire::Bytes encode_converged(const ConvergedNotice& c) {
  wire::Writer w;
  w.u8(c.converged ? 1 : 0);
  w.u32(c.iterations);
  write_vector(w, c.beta);
  return std::move(w).take();
}

ConvergedNotice decode_converged(std::span<const uint8_t> payload) {
  wire::Reader r(payload);
  ConvergedNotice c;
  c.converged = r.u8() != 0;
  c.iterations = r.u32();
  c.beta = read_vector(r);
  r.expect_done();
  return c;
}

wire::Bytes encode_beta(const Vector& beta) {
  wire::Writer w;
  write_vector(w, beta);
  return std::move(w).take();
}

Vector decode_beta(std::span<const uint8_t> payload, Eigen::Index expected) {
  wire::Reader r(payload);
  Vector v = read_vector(r);
  r.expect_done();
  if (v.size() != expected) throw ParseError("coefficient vector has the wrong length");
  if (!v.allFinite()) throw ParseError("coefficient vector is not finite");
  return v;
}

wire::Bytes encode_cipher_block(uint16_t rows, uint16_t cols,
                                std::span<const paillier::Ciphertext> cs) {
  wire::Writer w;
  write_ciphertexts(w, rows, cols, cs);
  return std::move(w).take();
}

std::vector<paillier::Ciphertext> decode_cipher_block(std::span<const uint8_t> payload,
                                                      uint16_t rows, uint16_t cols) {
  wire::Reader r(payload);
  uint16_t got_rows = 0, got_cols = 0;
  auto out = read_ciphertexts(r, got_rows, got_cols);
  r.expect_done();
  if (got_rows != rows || got_cols != cols)
    throw ParseError("ciphertext block is " + std::to_string(got_rows) + "x" +
                     std::to_string(got_cols) + ", expected " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  return out;
}

Envelope expect(Endpoint& ep, const PartyId& from, MsgType type) {
  Envelope e = ep.recv(from);
  if (e.type != type)
    throw ProtocolAbort(std::string("expected ") + msg_name(type) + " from " + to_string(from) +
                        ", got " + msg_name(e.type));
  return e;
}

AbortCode abort_code_for(const std::exception& e) {
  if (dynamic_cast<const PeerAborted*>(&e)) return static_cast<const PeerAborted&>(e).info().code;
  if (dynamic_cast<const Diverged*>(&e)) return AbortCode::kDiverged;
  if (dynamic_cast<const NotPositiveDefinite*>(&e)) return AbortCode::kNotPositiveDefinite;
  if (dynamic_cast<const ConfigError*>(&e)) return AbortCode::kConfig;
  return AbortCode::kProtocol;
}

size_t packed_size(Eigen::Index p) { return static_cast<size_t>(p * (p + 1) / 2); }

}  // namespace privlogit::protocol

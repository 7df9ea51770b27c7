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

#include "privlogit/secure/key_holder.hpp"

#include <algorithm>

#include "privlogit/errors.hpp"

namespace privlogit::secure {

namespace {

BlindedResponse failure(OpKind kind, Status status, std::string msg) {
  BlindedResponse r;
  r.kind = kind;
  r.status = status;
  r.error = std::move(msg);
  return r;
}

uint32_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : static_cast<uint32_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

}  // namespace

KeyHolder::KeyHolder(paillier::KeyPair kp, Rng rng) : kp_(std::move(kp)), rng_(std::move(rng)) {}

wire::Bytes KeyHolder::handle(std::span<const uint8_t> request) {
  BlindedRequest req;
  try {
    req = decode_request(request);
  } catch (const Error& e) {
    OpKind kind = OpKind::kMul;
    if (!request.empty() && request[0] >= static_cast<uint8_t>(OpKind::kMul) &&
        request[0] <= static_cast<uint8_t>(OpKind::kReveal))
      kind = static_cast<OpKind>(request[0]);
    return encode_response(failure(kind, Status::kMalformed, e.what()));
  }
  return encode_response(process(req));
}

BlindedResponse KeyHolder::process(const BlindedRequest& req) {
  const mpz_class& n = kp_.pub.n;
  const auto max_shift = static_cast<uint16_t>(kp_.pub.bits());
  if (req.shift > max_shift) return failure(req.kind, Status::kMalformed, "shift too large");

  std::vector<EncodedValue> plain;
  try {
    plain = paillier::parallel::decrypt_batch(kp_, req.operands);
  } catch (const Error& e) {
    return failure(req.kind, Status::kMalformed, e.what());
  }
  decryptions_ += plain.size();

  std::vector<mpz_class> vals;
  vals.reserve(plain.size());
  for (const auto& m : plain) vals.push_back(signed_value(m.v, n));

  TranscriptEntry entry;
  entry.kind = req.kind;
  entry.shift = req.shift;
  entry.items = static_cast<uint32_t>(req.items());
  if (!vals.empty()) {
    entry.min_bits = UINT32_MAX;
    for (const auto& v : vals) {
      const mpz_class mag = abs(v);
      entry.min_bits = std::min(entry.min_bits, bit_length(mag));
      entry.max_bits = std::max(entry.max_bits, bit_length(mag));
    }
  }

  BlindedResponse resp;
  resp.kind = req.kind;
  std::vector<EncodedValue> out;
  const size_t items = req.items();
  out.reserve(items);
  switch (req.kind) {
    case OpKind::kMul:
      for (size_t i = 0; i < items; ++i) out.push_back({wrap(vals[2 * i] * vals[2 * i + 1], n)});
      break;
    case OpKind::kTruncate:
      for (const auto& v : vals) {
        mpz_class q;
        mpz_fdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), req.shift);
        out.push_back({wrap(q, n)});
      }
      break;
    case OpKind::kDiv:
      for (size_t i = 0; i < items; ++i) {
        const mpz_class& y = vals[2 * i + 1];
        if (y <= 0) return failure(req.kind, Status::kDomain, "div: non-positive denominator");
        mpz_class q = vals[2 * i] << req.shift;
        mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), y.get_mpz_t());
        out.push_back({wrap(q, n)});
      }
      break;
    case OpKind::kSqrt:
      for (const auto& v : vals) {
        if (v <= 0) return failure(req.kind, Status::kDomain, "sqrt: non-positive operand");
        mpz_class r = v << req.shift;
        mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
        out.push_back({wrap(r, n)});
      }
      break;
    case OpKind::kSign:
      for (const auto& v : vals) resp.bits.push_back(v > 0);
      entry.sign_bits = resp.bits;
      break;
    case OpKind::kReveal:
      for (const auto& m : plain) resp.residues.push_back(m.v);
      break;
  }
  if (!out.empty()) resp.ciphertexts = paillier::parallel::encrypt_batch(kp_, out, rng_);
  if (record_) transcript_.push_back(std::move(entry));
  return resp;
}

}  // namespace privlogit::secure

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

#ifndef PRIVLOGIT_SECURE_BLINDED_EXCHANGE_HPP_
#define PRIVLOGIT_SECURE_BLINDED_EXCHANGE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "privlogit/crypto/paillier.hpp"
#include "privlogit/crypto/wire.hpp"

namespace privlogit::secure {

// Requests Server A sends to the key holder. Every operand is already
// blinded; `shift` carries the public scaling exponent for Truncate, Div and
// Sqrt.
enum class OpKind : uint8_t {
  kMul = 1,       // pairs (Enc(x+r), Enc(y+s)) -> Enc((x+r)(y+s))
  kTruncate = 2,  // Enc(w) -> Enc(floor(w / 2^shift))
  kDiv = 3,       // pairs (Enc(X), Enc(Y)) -> Enc(floor(X 2^shift / Y)), Y > 0
  kSqrt = 4,      // Enc(X) -> Enc(floor(sqrt(X 2^shift))), X > 0
  kSign = 5,      // Enc(X) -> [X > 0]
  kReveal = 6,    // Enc(w) -> w
};

enum class Status : uint8_t { kOk = 0, kDomain = 1, kMalformed = 2 };

// Operands per item: 2 for Mul and Div, 1 otherwise.
size_t arity(OpKind kind);
const char* op_name(OpKind kind);

struct BlindedRequest {
  OpKind kind = OpKind::kMul;
  uint16_t shift = 0;
  std::vector<paillier::Ciphertext> operands;  // items × arity, item-major

  size_t items() const { return operands.size() / arity(kind); }
};

struct BlindedResponse {
  OpKind kind = OpKind::kMul;
  Status status = Status::kOk;
  std::string error;                            // set when status != kOk
  std::vector<paillier::Ciphertext> ciphertexts;  // Mul, Truncate, Div, Sqrt
  std::vector<bool> bits;                        // Sign
  std::vector<mpz_class> residues;               // Reveal
};

wire::Bytes encode_request(const BlindedRequest& req);
// Throws ParseError on truncated or inconsistent bytes.
BlindedRequest decode_request(std::span<const uint8_t> bytes);

wire::Bytes encode_response(const BlindedResponse& resp);
BlindedResponse decode_response(std::span<const uint8_t> bytes);

}  // namespace privlogit::secure

#endif  // PRIVLOGIT_SECURE_BLINDED_EXCHANGE_HPP_

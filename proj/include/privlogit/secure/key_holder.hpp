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

#ifndef PRIVLOGIT_SECURE_KEY_HOLDER_HPP_
#define PRIVLOGIT_SECURE_KEY_HOLDER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "privlogit/crypto/paillier.hpp"
#include "privlogit/secure/blinded_exchange.hpp"

namespace privlogit::secure {

// What the key holder saw for one request. Only blinded values are ever
// decrypted, so the record is shape plus bit lengths and, for kSign, the
// revealed bits.
struct TranscriptEntry {
  OpKind kind = OpKind::kMul;
  uint16_t shift = 0;
  uint32_t items = 0;
  uint32_t min_bits = 0;  // over all decrypted operands
  uint32_t max_bits = 0;
  std::vector<bool> sign_bits;
};

// Server B: holds the private key and answers blinded requests. Every
// result is re-encrypted with fresh randomness.
class KeyHolder {
 public:
  KeyHolder(paillier::KeyPair kp, Rng rng);

  const paillier::PublicKey& public_key() const { return kp_.pub; }

  // Never throws on bad input: malformed requests and domain violations come
  // back as a non-OK status.
  wire::Bytes handle(std::span<const uint8_t> request);
  BlindedResponse process(const BlindedRequest& req);

  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  void set_record_transcript(bool on) { record_ = on; }
  uint64_t decryptions() const { return decryptions_; }

 private:
  paillier::KeyPair kp_;
  Rng rng_;
  std::vector<TranscriptEntry> transcript_;
  bool record_ = true;
  uint64_t decryptions_ = 0;
};

}  // namespace privlogit::secure

#endif  // PRIVLOGIT_SECURE_KEY_HOLDER_HPP_

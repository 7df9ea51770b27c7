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

#ifndef PRIVLOGIT_SECURE_ENCRYPTED_BACKEND_HPP_
#define PRIVLOGIT_SECURE_ENCRYPTED_BACKEND_HPP_

#include "privlogit/secure/backend.hpp"
#include "privlogit/secure/blinded_exchange.hpp"
#include "privlogit/secure/key_holder.hpp"

namespace privlogit::secure {

// Carries one serialized BlindedRequest to the key holder and returns its
// serialized response.
class KeyHolderLink {
 public:
  virtual ~KeyHolderLink() = default;
  virtual wire::Bytes exchange(const wire::Bytes& request) = 0;
};

// In-process link, no transport.
class DirectLink final : public KeyHolderLink {
 public:
  explicit DirectLink(KeyHolder& holder) : holder_(holder) {}
  wire::Bytes exchange(const wire::Bytes& request) override { return holder_.handle(request); }

 private:
  KeyHolder& holder_;
};

// Server A: holds ciphertexts and the public key only. Interactive
// operations blind their operands, ask the key holder through `link`, and
// unblind the re-encrypted answers.
//
//   mul       additive masks r, s uniform in Z_N
//   truncate  additive mask r·2^k + r', r' < 2^k, r with σ spare bits
//   div       multiplicative masks of σ bits and a random sign on the
//             numerator; the quotient is rescaled by a public integer
//             approximation of r'/r
//   sqrt      multiplicative mask ρ², rescaled by an approximation of 1/ρ
//   sign      multiplicative mask of σ bits (sign preserving)
//   reveal    additive mask uniform in Z_N
class EncryptedBackend final : public SecureBackend {
 public:
  // Throws ParameterError when the modulus is too small for the blinded
  // division and square-root headroom.
  EncryptedBackend(paillier::PublicKey pk, FixedPointParams params, KeyHolderLink& link, Rng rng);

  const HomomorphicOps& ops() const override { return ops_; }

 protected:
  std::vector<Ciphertext> do_mul_raw(std::span<const Ciphertext> a,
                                     std::span<const Ciphertext> b) override;
  std::vector<Ciphertext> do_truncate(std::span<const Ciphertext> a, int shift,
                                      int bound_bits) override;
  std::vector<Ciphertext> do_div(std::span<const Ciphertext> num,
                                 std::span<const Ciphertext> den) override;
  std::vector<Ciphertext> do_sqrt(std::span<const Ciphertext> a) override;
  std::vector<bool> do_sign(std::span<const Ciphertext> a) override;
  std::vector<EncodedValue> do_reveal(std::span<const Ciphertext> a) override;

 private:
  BlindedResponse round_trip(const BlindedRequest& req, size_t expected);

  PaillierOps ops_;
  KeyHolderLink& link_;
};

}  // namespace privlogit::secure

#endif  // PRIVLOGIT_SECURE_ENCRYPTED_BACKEND_HPP_

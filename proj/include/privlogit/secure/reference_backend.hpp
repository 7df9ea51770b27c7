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

#ifndef PRIVLOGIT_SECURE_REFERENCE_BACKEND_HPP_
#define PRIVLOGIT_SECURE_REFERENCE_BACKEND_HPP_

#include "privlogit/secure/backend.hpp"

namespace privlogit::secure {

// Plaintext fixed-point arithmetic behind the SecureBackend interface.
// "Ciphertexts" hold residues mod N directly. Every interactive operation is
// the exact floor-rounded counterpart of the blinded subprotocol, so it is
// the oracle the encrypted backend is tested against.
class ReferenceBackend final : public SecureBackend {
 public:
  explicit ReferenceBackend(FixedPointParams params);

  const HomomorphicOps& ops() const override { return ops_; }

  // Test helpers: encode/decode without counting.
  Ciphertext wrap_value(double x) const { return constant(x); }
  double value(const Ciphertext& c) const { return privlogit::decode({c.c}, params()); }

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
  PlainOps ops_;
};

}  // namespace privlogit::secure

#endif  // PRIVLOGIT_SECURE_REFERENCE_BACKEND_HPP_

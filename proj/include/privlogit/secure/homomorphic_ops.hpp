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

#ifndef PRIVLOGIT_SECURE_HOMOMORPHIC_OPS_HPP_
#define PRIVLOGIT_SECURE_HOMOMORPHIC_OPS_HPP_

#include <memory>
#include <span>
#include <vector>

#include "privlogit/crypto/paillier.hpp"

namespace privlogit::secure {

using paillier::Ciphertext;

// Key-free additive homomorphism over Z_N. PaillierOps works on real
// ciphertexts; PlainOps stores the residue itself in Ciphertext::c so the
// same protocol code can run without cryptography.
class HomomorphicOps {
 public:
  virtual ~HomomorphicOps() = default;

  virtual const mpz_class& modulus() const = 0;

  virtual Ciphertext encrypt(const EncodedValue& m, Rng& rng) const = 0;
  virtual std::vector<Ciphertext> encrypt_batch(std::span<const EncodedValue> ms,
                                                Rng& rng) const = 0;
  // Encryption with no randomness, for public values.
  virtual Ciphertext trivial(const EncodedValue& m) const = 0;

  virtual Ciphertext add(const Ciphertext& a, const Ciphertext& b) const = 0;
  virtual Ciphertext sub(const Ciphertext& a, const Ciphertext& b) const = 0;
  virtual Ciphertext negate(const Ciphertext& a) const = 0;
  // Multiplies by the residue k; residues above N/2 act as negative.
  virtual Ciphertext scalar_mul(const Ciphertext& a, const EncodedValue& k) const = 0;

  // Throws MalformedCiphertext for values that are not valid ciphertexts.
  virtual void check(const Ciphertext& c) const = 0;

  // Σ k_i · a_i, the inner product of a ciphertext vector with residues.
  Ciphertext dot(std::span<const Ciphertext> a, std::span<const EncodedValue> k) const;
};

class PaillierOps final : public HomomorphicOps {
 public:
  explicit PaillierOps(paillier::PublicKey pk) : pk_(std::move(pk)) {}

  const paillier::PublicKey& public_key() const { return pk_; }
  const mpz_class& modulus() const override { return pk_.n; }

  Ciphertext encrypt(const EncodedValue& m, Rng& rng) const override;
  std::vector<Ciphertext> encrypt_batch(std::span<const EncodedValue> ms,
                                        Rng& rng) const override;
  Ciphertext trivial(const EncodedValue& m) const override;
  Ciphertext add(const Ciphertext& a, const Ciphertext& b) const override;
  Ciphertext sub(const Ciphertext& a, const Ciphertext& b) const override;
  Ciphertext negate(const Ciphertext& a) const override;
  Ciphertext scalar_mul(const Ciphertext& a, const EncodedValue& k) const override;
  void check(const Ciphertext& c) const override;

 private:
  paillier::PublicKey pk_;
};

class PlainOps final : public HomomorphicOps {
 public:
  explicit PlainOps(mpz_class modulus) : n_(std::move(modulus)) {}

  const mpz_class& modulus() const override { return n_; }

  Ciphertext encrypt(const EncodedValue& m, Rng& rng) const override;
  std::vector<Ciphertext> encrypt_batch(std::span<const EncodedValue> ms,
                                        Rng& rng) const override;
  Ciphertext trivial(const EncodedValue& m) const override;
  Ciphertext add(const Ciphertext& a, const Ciphertext& b) const override;
  Ciphertext sub(const Ciphertext& a, const Ciphertext& b) const override;
  Ciphertext negate(const Ciphertext& a) const override;
  Ciphertext scalar_mul(const Ciphertext& a, const EncodedValue& k) const override;
  void check(const Ciphertext& c) const override;

 private:
  mpz_class n_;
};

}  // namespace privlogit::secure

#endif  // PRIVLOGIT_SECURE_HOMOMORPHIC_OPS_HPP_

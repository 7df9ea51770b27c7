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

#ifndef PRIVLOGIT_CRYPTO_PAILLIER_HPP_
#define PRIVLOGIT_CRYPTO_PAILLIER_HPP_

#include <gmpxx.h>

#include <span>
#include <vector>

#include "privlogit/crypto/fixed_point.hpp"
#include "privlogit/crypto/wire.hpp"
#include "privlogit/random.hpp"

namespace privlogit::paillier {

// Paillier with g = n + 1.
struct PublicKey {
  mpz_class n;
  mpz_class n_squared;
  mpz_class g;

  static PublicKey from_modulus(const mpz_class& n);
  unsigned bits() const { return static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)); }

  friend bool operator==(const PublicKey& a, const PublicKey& b) { return a.n == b.n; }
};

// Carmichael-function private key plus CRT precomputation.
struct PrivateKey {
  mpz_class p, q;
  mpz_class lambda_n;  // lcm(p − 1, q − 1)
  mpz_class mu;        // L(g^λ mod n²)⁻¹ mod n

  // CRT decryption
  mpz_class p_squared, q_squared;
  mpz_class hp, hq;        // L_p(g^(p−1) mod p²)⁻¹ mod p, same for q
  mpz_class q_inv_mod_p;   // q⁻¹ mod p
  // CRT r^n mod n²: exponent n reduced mod φ(p²) and φ(q²)
  mpz_class n_mod_phi_p2, n_mod_phi_q2;
  mpz_class q2_inv_mod_p2;  // (q²)⁻¹ mod p²
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;

  // Rebuilds the whole key from its two primes.
  static KeyPair from_primes(const mpz_class& p, const mpz_class& q);
};

struct Ciphertext {
  mpz_class c;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// Supported modulus sizes. 1024 is for tests only.
bool supported_key_bits(int bits);

// Two equal-size primes with the top two bits set, so n has exactly `bits`
// bits. Deterministic for a given Rng state. Throws ParameterError for an
// unsupported size and Error when no valid pair turns up within the retry
// budget.
KeyPair keygen(int bits, Rng& rng);

// Uniform r in Z*_n.
mpz_class random_unit(const PublicKey& pk, Rng& rng);

// (1 + m n) r^n mod n² with fresh r. Throws ParameterError for m outside
// [0, n).
Ciphertext encrypt(const PublicKey& pk, const EncodedValue& m, Rng& rng);
// Same with caller-supplied randomness r ∈ Z*_n.
Ciphertext encrypt_with(const PublicKey& pk, const EncodedValue& m, const mpz_class& r);
// Key-holder fast path: r^n computed by CRT over p², q².
Ciphertext encrypt(const KeyPair& kp, const EncodedValue& m, Rng& rng);
Ciphertext encrypt_with(const KeyPair& kp, const EncodedValue& m, const mpz_class& r);

// 1 + m n: a valid encryption with r = 1. Only for values whose randomness
// is supplied by another operand (e.g. masks added to a fresh ciphertext).
Ciphertext encrypt_trivial(const PublicKey& pk, const EncodedValue& m);

// CRT decryption. Throws MalformedCiphertext unless c ∈ Z*_{n²}.
EncodedValue decrypt(const KeyPair& kp, const Ciphertext& c);
// L(c^λ mod n²) μ mod n, no CRT. Reference for tests.
EncodedValue decrypt_textbook(const KeyPair& kp, const Ciphertext& c);

// ⊕: Dec = Dec(a) + Dec(b) mod n.
Ciphertext add(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b);
// ⊖: Dec = Dec(a) − Dec(b) mod n.
Ciphertext sub(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b);
// Dec = −Dec(a) mod n.
Ciphertext negate(const PublicKey& pk, const Ciphertext& a);
// Dec = k · Dec(a) mod n. Residues of k above n/2 are treated as negative:
// the ciphertext is inverted and raised to |k|, which keeps the exponent
// short for small signed constants.
Ciphertext scalar_mul(const PublicKey& pk, const Ciphertext& a, const EncodedValue& k);

// Throws MalformedCiphertext unless 0 < c < n² and gcd(c, n) = 1.
void check_ciphertext(const PublicKey& pk, const Ciphertext& c);

// Length-prefixed big-endian serialisation.
void write_public(wire::Writer& w, const PublicKey& pk);
PublicKey read_public(wire::Reader& r);
void write_private(wire::Writer& w, const KeyPair& kp);
KeyPair read_private(wire::Reader& r);

// Data-parallel batches. Randomness is drawn serially from `rng` before the
// parallel section so results do not depend on the thread count; `serial`
// and `parallel` produce identical ciphertexts for identical Rng state.
namespace serial {
std::vector<Ciphertext> encrypt_batch(const PublicKey& pk, std::span<const EncodedValue> ms,
                                      Rng& rng);
std::vector<EncodedValue> decrypt_batch(const KeyPair& kp, std::span<const Ciphertext> cs);
}  // namespace serial

namespace parallel {
std::vector<Ciphertext> encrypt_batch(const PublicKey& pk, std::span<const EncodedValue> ms,
                                      Rng& rng);
std::vector<Ciphertext> encrypt_batch(const KeyPair& kp, std::span<const EncodedValue> ms,
                                      Rng& rng);
std::vector<EncodedValue> decrypt_batch(const KeyPair& kp, std::span<const Ciphertext> cs);
}  // namespace parallel

}  // namespace privlogit::paillier

#endif  // PRIVLOGIT_CRYPTO_PAILLIER_HPP_

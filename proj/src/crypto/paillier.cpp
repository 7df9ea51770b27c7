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

#include "privlogit/crypto/paillier.hpp"

#include <string>

#include "privlogit/errors.hpp"

namespace privlogit::paillier {

namespace {

constexpr int kMaxPrimeAttempts = 1000;
constexpr int kMillerRabinReps = 40;

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return out;
}

mpz_class invert(const mpz_class& a, const mpz_class& mod) {
  mpz_class out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw MalformedCiphertext("value not invertible");
  return out;
}

// L(x) = (x − 1) / d
mpz_class big_l(const mpz_class& x, const mpz_class& d) {
  mpz_class out = x - 1;
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), d.get_mpz_t());
  return out;
}

mpz_class random_prime(unsigned bits, Rng& rng) {
  for (int attempt = 0; attempt < kMaxPrimeAttempts; ++attempt) {
    mpz_class c = rng.exact_bits(bits);
    mpz_setbit(c.get_mpz_t(), bits - 2);  // top two bits set: p q has 2·bits bits
    mpz_setbit(c.get_mpz_t(), 0);
    if (mpz_probab_prime_p(c.get_mpz_t(), kMillerRabinReps) != 0) return c;
  }
  throw Error("prime generation failed after " + std::to_string(kMaxPrimeAttempts) +
              " candidates");
}

void check_plaintext(const PublicKey& pk, const EncodedValue& m) {
  if (m.v < 0 || m.v >= pk.n) throw ParameterError("plaintext outside [0, n)");
}

}  // namespace

PublicKey PublicKey::from_modulus(const mpz_class& n) {
  if (n <= 3) throw ParameterError("modulus too small");
  return PublicKey{n, n * n, n + 1};
}

KeyPair KeyPair::from_primes(const mpz_class& p, const mpz_class& q) {
  if (p == q) throw ParameterError("primes must differ");
  KeyPair kp;
  kp.pub = PublicKey::from_modulus(p * q);
  auto& s = kp.priv;
  s.p = p;
  s.q = q;
  const mpz_class pm1 = p - 1, qm1 = q - 1;
  mpz_lcm(s.lambda_n.get_mpz_t(), pm1.get_mpz_t(), qm1.get_mpz_t());
  s.mu = invert(big_l(powm(kp.pub.g, s.lambda_n, kp.pub.n_squared), kp.pub.n), kp.pub.n);

  s.p_squared = p * p;
  s.q_squared = q * q;
  s.hp = invert(big_l(powm(kp.pub.g, pm1, s.p_squared), p), p);
  s.hq = invert(big_l(powm(kp.pub.g, qm1, s.q_squared), q), q);
  s.q_inv_mod_p = invert(q, p);
  s.n_mod_phi_p2 = kp.pub.n % (p * pm1);
  s.n_mod_phi_q2 = kp.pub.n % (q * qm1);
  s.q2_inv_mod_p2 = invert(s.q_squared, s.p_squared);
  return kp;
}

bool supported_key_bits(int bits) { return bits == 1024 || bits == 2048 || bits == 3072; }

KeyPair keygen(int bits, Rng& rng) {
  if (!supported_key_bits(bits))
    throw ParameterError("unsupported key size " + std::to_string(bits) +
                         " (use 1024 for tests, 2048 or 3072)");
  const unsigned half = static_cast<unsigned>(bits / 2);
  for (int attempt = 0; attempt < kMaxPrimeAttempts; ++attempt) {
    const mpz_class p = random_prime(half, rng);
    const mpz_class q = random_prime(half, rng);
    if (p == q) continue;
    const mpz_class n = p * q;
    const mpz_class phi = (p - 1) * (q - 1);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), phi.get_mpz_t());
    if (g != 1 || mpz_sizeinbase(n.get_mpz_t(), 2) != static_cast<size_t>(bits)) continue;
    return KeyPair::from_primes(p, q);
  }
  throw Error("key generation failed");
}

mpz_class random_unit(const PublicKey& pk, Rng& rng) {
  while (true) {
    mpz_class r = rng.below(pk.n);
    if (r == 0) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t());
    if (g == 1) return r;
  }
}

Ciphertext encrypt_trivial(const PublicKey& pk, const EncodedValue& m) {
  check_plaintext(pk, m);
  mpz_class c = m.v * pk.n + 1;
  return {wrap(c, pk.n_squared)};
}

Ciphertext encrypt_with(const PublicKey& pk, const EncodedValue& m, const mpz_class& r) {
  Ciphertext c = encrypt_trivial(pk, m);
  c.c = c.c * powm(r, pk.n, pk.n_squared) % pk.n_squared;
  return c;
}

Ciphertext encrypt(const PublicKey& pk, const EncodedValue& m, Rng& rng) {
  return encrypt_with(pk, m, random_unit(pk, rng));
}

Ciphertext encrypt_with(const KeyPair& kp, const EncodedValue& m, const mpz_class& r) {
  const auto& s = kp.priv;
  const mpz_class rp = powm(r % s.p_squared, s.n_mod_phi_p2, s.p_squared);
  const mpz_class rq = powm(r % s.q_squared, s.n_mod_phi_q2, s.q_squared);
  // Garner: x = rq + q² · ((rp − rq) · (q²)⁻¹ mod p²)
  mpz_class h = wrap((rp - rq) * s.q2_inv_mod_p2, s.p_squared);
  const mpz_class rn = rq + s.q_squared * h;
  Ciphertext c = encrypt_trivial(kp.pub, m);
  c.c = c.c * rn % kp.pub.n_squared;
  return c;
}

Ciphertext encrypt(const KeyPair& kp, const EncodedValue& m, Rng& rng) {
  return encrypt_with(kp, m, random_unit(kp.pub, rng));
}

void check_ciphertext(const PublicKey& pk, const Ciphertext& c) {
  if (c.c <= 0 || c.c >= pk.n_squared) throw MalformedCiphertext("ciphertext outside Z_{n^2}");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c.c.get_mpz_t(), pk.n.get_mpz_t());
  if (g != 1) throw MalformedCiphertext("ciphertext not a unit mod n^2");
}

EncodedValue decrypt(const KeyPair& kp, const Ciphertext& c) {
  check_ciphertext(kp.pub, c);
  const auto& s = kp.priv;
  const mpz_class mp =
      big_l(powm(c.c % s.p_squared, s.p - 1, s.p_squared), s.p) * s.hp % s.p;
  const mpz_class mq =
      big_l(powm(c.c % s.q_squared, s.q - 1, s.q_squared), s.q) * s.hq % s.q;
  // Garner: m = mq + q · ((mp − mq) q⁻¹ mod p)
  const mpz_class h = wrap((mp - mq) * s.q_inv_mod_p, s.p);
  return {mq + s.q * h};
}

EncodedValue decrypt_textbook(const KeyPair& kp, const Ciphertext& c) {
  check_ciphertext(kp.pub, c);
  const mpz_class u = powm(c.c, kp.priv.lambda_n, kp.pub.n_squared);
  return {big_l(u, kp.pub.n) * kp.priv.mu % kp.pub.n};
}

Ciphertext add(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b) {
  return {a.c * b.c % pk.n_squared};
}

Ciphertext negate(const PublicKey& pk, const Ciphertext& a) {
  return {invert(a.c, pk.n_squared)};
}

Ciphertext sub(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b) {
  return add(pk, a, negate(pk, b));
}

Ciphertext scalar_mul(const PublicKey& pk, const Ciphertext& a, const EncodedValue& k) {
  if (k.v < 0 || k.v >= pk.n) throw ParameterError("scalar outside [0, n)");
  const mpz_class s = signed_value(k.v, pk.n);
  if (s >= 0) return {powm(a.c, s, pk.n_squared)};
  return {powm(invert(a.c, pk.n_squared), -s, pk.n_squared)};
}

void write_public(wire::Writer& w, const PublicKey& pk) { w.bigint(pk.n); }

PublicKey read_public(wire::Reader& r) { return PublicKey::from_modulus(r.bigint()); }

void write_private(wire::Writer& w, const KeyPair& kp) {
  w.bigint(kp.priv.p);
  w.bigint(kp.priv.q);
}

KeyPair read_private(wire::Reader& r) {
  mpz_class p = r.bigint();
  mpz_class q = r.bigint();
  return KeyPair::from_primes(p, q);
}

}  // namespace privlogit::paillier

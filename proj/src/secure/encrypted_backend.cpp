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

#include "privlogit/secure/encrypted_backend.hpp"

#include "privlogit/core/parallel.hpp"
#include "privlogit/errors.hpp"

namespace privlogit::secure {

namespace {

// Extra quotient bits requested from the key holder beyond the working
// scale; the final truncation removes them.
int div_guard_bits(const FixedPointParams& p) { return p.frac_bits; }
int div_rescale_bits(const FixedPointParams& p) { return p.value_bits() + 8; }
int sqrt_guard_bits(const FixedPointParams& p) { return p.frac_bits; }
int sqrt_rescale_bits(const FixedPointParams& p) { return p.value_bits() + p.stat_sec_bits; }

// round(2^bits · num / den) for positive num, den.
mpz_class scaled_ratio(const mpz_class& num, const mpz_class& den, int bits) {
  mpz_class q = (num << (bits + 1));
  mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
  q += 1;
  q >>= 1;
  return q;
}

}  // namespace

EncryptedBackend::EncryptedBackend(paillier::PublicKey pk, FixedPointParams params,
                                   KeyHolderLink& link, Rng rng)
    : SecureBackend(params, std::move(rng)), ops_(std::move(pk)), link_(link) {
  if (params.modulus != ops_.public_key().n)
    throw ParameterError("fixed-point modulus differs from the public key");
  const int needed = params.value_bits() + div_guard_bits(params) + div_rescale_bits(params) +
                     params.stat_sec_bits + 4;
  if (needed >= static_cast<int>(ops_.public_key().bits()))
    throw ParameterError("modulus too small for blinded division headroom");
}

BlindedResponse EncryptedBackend::round_trip(const BlindedRequest& req, size_t expected) {
  const wire::Bytes out = encode_request(req);
  const wire::Bytes in = link_.exchange(out);
  ++counters_.rounds;
  counters_.bytes_exchanged += out.size() + in.size();
  counters_.decryptions_at_b += req.operands.size();

  BlindedResponse resp = decode_response(in);
  if (resp.kind != req.kind) throw ProtocolAbort("key holder answered a different op kind");
  if (resp.status == Status::kDomain) throw DomainError(resp.error);
  if (resp.status != Status::kOk) throw ProtocolAbort("key holder rejected request: " + resp.error);
  const size_t got = req.kind == OpKind::kSign     ? resp.bits.size()
                     : req.kind == OpKind::kReveal ? resp.residues.size()
                                                   : resp.ciphertexts.size();
  if (got != expected) throw ProtocolAbort("key holder returned the wrong number of results");
  for (const auto& c : resp.ciphertexts) ops_.check(c);
  return resp;
}

std::vector<Ciphertext> EncryptedBackend::do_mul_raw(std::span<const Ciphertext> a,
                                                     std::span<const Ciphertext> b) {
  const size_t n = a.size();
  const mpz_class& mod = params().modulus;
  std::vector<mpz_class> r(n), s(n);
  for (size_t i = 0; i < n; ++i) {
    r[i] = rng_.below(mod);
    s[i] = rng_.below(mod);
  }
  BlindedRequest req{OpKind::kMul, 0, std::vector<Ciphertext>(2 * n)};
  parallel_for(n, [&](size_t i) {
    req.operands[2 * i] = ops_.add(a[i], ops_.trivial({r[i]}));
    req.operands[2 * i + 1] = ops_.add(b[i], ops_.trivial({s[i]}));
  });
  const auto resp = round_trip(req, n);

  // (x+r)(y+s) − r·y − s·x − r·s = x·y
  std::vector<Ciphertext> out(n);
  parallel_for(n, [&](size_t i) {
    Ciphertext c = ops_.sub(resp.ciphertexts[i], ops_.scalar_mul(b[i], {r[i]}));
    c = ops_.sub(c, ops_.scalar_mul(a[i], {s[i]}));
    out[i] = ops_.sub(c, ops_.trivial({wrap(r[i] * s[i], mod)}));
  });
  return out;
}

std::vector<Ciphertext> EncryptedBackend::do_truncate(std::span<const Ciphertext> a, int shift,
                                                      int bound_bits) {
  const int sigma = params().stat_sec_bits;
  if (bound_bits + sigma + 2 >= static_cast<int>(ops_.public_key().bits()))
    throw RangeError("truncate: blinded value would wrap the modulus");
  const size_t n = a.size();
  // R = hi·2^shift + lo with hi ≥ 2^(bound−shift), so v + R > 0 for |v| < 2^bound.
  std::vector<mpz_class> hi(n), mask(n);
  for (size_t i = 0; i < n; ++i) {
    hi[i] = rng_.exact_bits(static_cast<unsigned>(bound_bits - shift + sigma));
    mask[i] = (hi[i] << shift) + rng_.bits(static_cast<unsigned>(shift));
  }
  BlindedRequest req{OpKind::kTruncate, static_cast<uint16_t>(shift), std::vector<Ciphertext>(n)};
  parallel_for(n, [&](size_t i) { req.operands[i] = ops_.add(a[i], ops_.trivial({mask[i]})); });
  const auto resp = round_trip(req, n);
  std::vector<Ciphertext> out(n);
  parallel_for(n, [&](size_t i) { out[i] = ops_.sub(resp.ciphertexts[i], ops_.trivial({hi[i]})); });
  return out;
}

std::vector<Ciphertext> EncryptedBackend::do_div(std::span<const Ciphertext> num,
                                                 std::span<const Ciphertext> den) {
  const auto& p = params();
  const size_t n = num.size();
  const unsigned sigma = static_cast<unsigned>(p.stat_sec_bits);
  const int guard = div_guard_bits(p), rescale = div_rescale_bits(p);
  std::vector<EncodedValue> num_mask(n), den_mask(n), fix(n);
  for (size_t i = 0; i < n; ++i) {
    const mpz_class r = rng_.exact_bits(sigma);
    const mpz_class rp = rng_.exact_bits(sigma);
    const bool flip = rng_.bernoulli(0.5);
    const mpz_class c = scaled_ratio(rp, r, rescale);
    num_mask[i] = {wrap(flip ? mpz_class(-r) : r, p.modulus)};
    den_mask[i] = {rp};
    fix[i] = {wrap(flip ? mpz_class(-c) : c, p.modulus)};
  }
  BlindedRequest req{OpKind::kDiv, static_cast<uint16_t>(p.frac_bits + guard),
                     std::vector<Ciphertext>(2 * n)};
  parallel_for(n, [&](size_t i) {
    req.operands[2 * i] = ops_.scalar_mul(num[i], num_mask[i]);
    req.operands[2 * i + 1] = ops_.scalar_mul(den[i], den_mask[i]);
  });
  const auto resp = round_trip(req, n);
  std::vector<Ciphertext> scaled(n);
  parallel_for(n, [&](size_t i) { scaled[i] = ops_.scalar_mul(resp.ciphertexts[i], fix[i]); });
  return do_truncate(scaled, guard + rescale, p.value_bits() + guard + rescale + 1);
}

std::vector<Ciphertext> EncryptedBackend::do_sqrt(std::span<const Ciphertext> a) {
  const auto& p = params();
  const size_t n = a.size();
  const unsigned half_sigma = static_cast<unsigned>((p.stat_sec_bits + 1) / 2);
  const int guard = sqrt_guard_bits(p), rescale = sqrt_rescale_bits(p);
  std::vector<EncodedValue> mask(n), fix(n);
  for (size_t i = 0; i < n; ++i) {
    const mpz_class rho = rng_.exact_bits(half_sigma);
    mask[i] = {rho * rho};
    fix[i] = {scaled_ratio(1, rho, rescale)};
  }
  BlindedRequest req{OpKind::kSqrt, static_cast<uint16_t>(p.frac_bits + 2 * guard),
                     std::vector<Ciphertext>(n)};
  parallel_for(n, [&](size_t i) { req.operands[i] = ops_.scalar_mul(a[i], mask[i]); });
  const auto resp = round_trip(req, n);
  std::vector<Ciphertext> scaled(n);
  parallel_for(n, [&](size_t i) { scaled[i] = ops_.scalar_mul(resp.ciphertexts[i], fix[i]); });
  return do_truncate(scaled, guard + rescale, p.value_bits() + guard + rescale + 1);
}

std::vector<bool> EncryptedBackend::do_sign(std::span<const Ciphertext> a) {
  const size_t n = a.size();
  std::vector<EncodedValue> mask(n);
  for (auto& m : mask) m = {rng_.exact_bits(static_cast<unsigned>(params().stat_sec_bits))};
  BlindedRequest req{OpKind::kSign, 0, std::vector<Ciphertext>(n)};
  parallel_for(n, [&](size_t i) { req.operands[i] = ops_.scalar_mul(a[i], mask[i]); });
  return round_trip(req, n).bits;
}

std::vector<EncodedValue> EncryptedBackend::do_reveal(std::span<const Ciphertext> a) {
  const size_t n = a.size();
  const mpz_class& mod = params().modulus;
  std::vector<mpz_class> mask(n);
  for (auto& m : mask) m = rng_.below(mod);
  BlindedRequest req{OpKind::kReveal, 0, std::vector<Ciphertext>(n)};
  parallel_for(n, [&](size_t i) { req.operands[i] = ops_.add(a[i], ops_.trivial({mask[i]})); });
  const auto resp = round_trip(req, n);
  std::vector<EncodedValue> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = {wrap(resp.residues[i] - mask[i], mod)};
  return out;
}

}  // namespace privlogit::secure

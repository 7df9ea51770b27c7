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

#include <omp.h>

#include "privlogit/crypto/paillier.hpp"

namespace privlogit::paillier {

namespace {

std::vector<mpz_class> draw_units(const PublicKey& pk, size_t count, Rng& rng) {
  std::vector<mpz_class> rs;
  rs.reserve(count);
  for (size_t i = 0; i < count; ++i) rs.push_back(random_unit(pk, rng));
  return rs;
}

// Exceptions must not escape an OpenMP region; validate up front.
void check_plaintexts(const PublicKey& pk, std::span<const EncodedValue> ms) {
  for (const auto& m : ms) encrypt_trivial(pk, m);
}

}  // namespace

namespace serial {

std::vector<Ciphertext> encrypt_batch(const PublicKey& pk, std::span<const EncodedValue> ms,
                                      Rng& rng) {
  const auto rs = draw_units(pk, ms.size(), rng);
  std::vector<Ciphertext> out;
  out.reserve(ms.size());
  for (size_t i = 0; i < ms.size(); ++i) out.push_back(encrypt_with(pk, ms[i], rs[i]));
  return out;
}

std::vector<EncodedValue> decrypt_batch(const KeyPair& kp, std::span<const Ciphertext> cs) {
  std::vector<EncodedValue> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(decrypt(kp, c));
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Ciphertext> encrypt_batch(const PublicKey& pk, std::span<const EncodedValue> ms,
                                      Rng& rng) {
  check_plaintexts(pk, ms);
  const auto rs = draw_units(pk, ms.size(), rng);
  std::vector<Ciphertext> out(ms.size());
  const auto n = static_cast<std::ptrdiff_t>(ms.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = encrypt_with(pk, ms[i], rs[i]);
  return out;
}

std::vector<Ciphertext> encrypt_batch(const KeyPair& kp, std::span<const EncodedValue> ms,
                                      Rng& rng) {
  check_plaintexts(kp.pub, ms);
  const auto rs = draw_units(kp.pub, ms.size(), rng);
  std::vector<Ciphertext> out(ms.size());
  const auto n = static_cast<std::ptrdiff_t>(ms.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = encrypt_with(kp, ms[i], rs[i]);
  return out;
}

std::vector<EncodedValue> decrypt_batch(const KeyPair& kp, std::span<const Ciphertext> cs) {
  std::vector<EncodedValue> out(cs.size());
  const auto n = static_cast<std::ptrdiff_t>(cs.size());
  for (const auto& c : cs) check_ciphertext(kp.pub, c);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = decrypt(kp, cs[i]);
  return out;
}

}  // namespace parallel
}  // namespace privlogit::paillier

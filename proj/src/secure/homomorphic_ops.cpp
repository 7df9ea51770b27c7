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

#include "privlogit/secure/homomorphic_ops.hpp"

#include "privlogit/errors.hpp"

namespace privlogit::secure {

Ciphertext HomomorphicOps::dot(std::span<const Ciphertext> a,
                               std::span<const EncodedValue> k) const {
  if (a.size() != k.size() || a.empty()) throw DimensionError("dot: length mismatch");
  Ciphertext acc = scalar_mul(a[0], k[0]);
  for (size_t i = 1; i < a.size(); ++i) acc = add(acc, scalar_mul(a[i], k[i]));
  return acc;
}

Ciphertext PaillierOps::encrypt(const EncodedValue& m, Rng& rng) const {
  return paillier::encrypt(pk_, m, rng);
}

std::vector<Ciphertext> PaillierOps::encrypt_batch(std::span<const EncodedValue> ms,
                                                   Rng& rng) const {
  return paillier::parallel::encrypt_batch(pk_, ms, rng);
}

Ciphertext PaillierOps::trivial(const EncodedValue& m) const {
  return paillier::encrypt_trivial(pk_, m);
}

Ciphertext PaillierOps::add(const Ciphertext& a, const Ciphertext& b) const {
  return paillier::add(pk_, a, b);
}

Ciphertext PaillierOps::sub(const Ciphertext& a, const Ciphertext& b) const {
  return paillier::sub(pk_, a, b);
}

Ciphertext PaillierOps::negate(const Ciphertext& a) const { return paillier::negate(pk_, a); }

Ciphertext PaillierOps::scalar_mul(const Ciphertext& a, const EncodedValue& k) const {
  return paillier::scalar_mul(pk_, a, k);
}

void PaillierOps::check(const Ciphertext& c) const { paillier::check_ciphertext(pk_, c); }

Ciphertext PlainOps::encrypt(const EncodedValue& m, Rng&) const { return trivial(m); }

std::vector<Ciphertext> PlainOps::encrypt_batch(std::span<const EncodedValue> ms, Rng&) const {
  std::vector<Ciphertext> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(trivial(m));
  return out;
}

Ciphertext PlainOps::trivial(const EncodedValue& m) const {
  if (m.v < 0 || m.v >= n_) throw ParameterError("plaintext outside [0, n)");
  return {m.v};
}

Ciphertext PlainOps::add(const Ciphertext& a, const Ciphertext& b) const {
  return {wrap(a.c + b.c, n_)};
}

Ciphertext PlainOps::sub(const Ciphertext& a, const Ciphertext& b) const {
  return {wrap(a.c - b.c, n_)};
}

Ciphertext PlainOps::negate(const Ciphertext& a) const { return {wrap(-a.c, n_)}; }

Ciphertext PlainOps::scalar_mul(const Ciphertext& a, const EncodedValue& k) const {
  if (k.v < 0 || k.v >= n_) throw ParameterError("scalar outside [0, n)");
  return {wrap(a.c * k.v, n_)};
}

void PlainOps::check(const Ciphertext& c) const {
  if (c.c < 0 || c.c >= n_) throw MalformedCiphertext("residue outside [0, n)");
}

}  // namespace privlogit::secure

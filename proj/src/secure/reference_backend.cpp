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

#include "privlogit/secure/reference_backend.hpp"

#include "privlogit/errors.hpp"

namespace privlogit::secure {

ReferenceBackend::ReferenceBackend(FixedPointParams params)
    : SecureBackend(params, Rng(0)), ops_(params.modulus) {}

std::vector<Ciphertext> ReferenceBackend::do_mul_raw(std::span<const Ciphertext> a,
                                                     std::span<const Ciphertext> b) {
  const auto& n = params().modulus;
  std::vector<Ciphertext> out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back({wrap(a[i].c * b[i].c, n)});
  return out;
}

std::vector<Ciphertext> ReferenceBackend::do_truncate(std::span<const Ciphertext> a, int shift,
                                                      int bound_bits) {
  const auto& n = params().modulus;
  std::vector<Ciphertext> out;
  out.reserve(a.size());
  for (const auto& c : a) {
    const mpz_class v = signed_value(c.c, n);
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > static_cast<size_t>(bound_bits))
      throw RangeError("truncate: operand exceeds its bound");
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    out.push_back({wrap(q, n)});
  }
  return out;
}

std::vector<Ciphertext> ReferenceBackend::do_div(std::span<const Ciphertext> num,
                                                 std::span<const Ciphertext> den) {
  const auto& n = params().modulus;
  std::vector<Ciphertext> out;
  out.reserve(num.size());
  for (size_t i = 0; i < num.size(); ++i) {
    const mpz_class a = signed_value(num[i].c, n);
    const mpz_class b = signed_value(den[i].c, n);
    if (b <= 0) throw DomainError("div: non-positive denominator");
    mpz_class q = a << params().frac_bits;
    mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
    out.push_back({wrap(q, n)});
  }
  return out;
}

std::vector<Ciphertext> ReferenceBackend::do_sqrt(std::span<const Ciphertext> a) {
  const auto& n = params().modulus;
  std::vector<Ciphertext> out;
  out.reserve(a.size());
  for (const auto& c : a) {
    const mpz_class v = signed_value(c.c, n);
    if (v <= 0) throw DomainError("sqrt: non-positive operand");
    mpz_class r = v << params().frac_bits;
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    out.push_back({r});
  }
  return out;
}

std::vector<bool> ReferenceBackend::do_sign(std::span<const Ciphertext> a) {
  std::vector<bool> out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(signed_value(c.c, params().modulus) > 0);
  return out;
}

std::vector<EncodedValue> ReferenceBackend::do_reveal(std::span<const Ciphertext> a) {
  std::vector<EncodedValue> out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back({c.c});
  return out;
}

}  // namespace privlogit::secure

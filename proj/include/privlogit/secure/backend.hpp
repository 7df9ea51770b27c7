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

#ifndef PRIVLOGIT_SECURE_BACKEND_HPP_
#define PRIVLOGIT_SECURE_BACKEND_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "privlogit/crypto/fixed_point.hpp"
#include "privlogit/random.hpp"
#include "privlogit/secure/homomorphic_ops.hpp"
#include "privlogit/secure/op_counters.hpp"

namespace privlogit::secure {

// Dense row-major matrix of ciphertexts.
class CipherMatrix {
 public:
  CipherMatrix() = default;
  CipherMatrix(size_t rows, size_t cols, const Ciphertext& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Ciphertext& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Ciphertext& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Ciphertext> row(size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Ciphertext>& data() const { return data_; }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Ciphertext> data_;
};

// The center's secure-arithmetic contract. Values are fixed-point encodings
// (scale 2^f) inside ciphertexts. Local operations need no key; interactive
// ones go through the backend's subprotocol implementation. Every public
// operation updates counters(); the batched forms count per element and
// cost one round per call.
class SecureBackend {
 public:
  SecureBackend(FixedPointParams params, Rng rng);
  virtual ~SecureBackend() = default;
  SecureBackend(const SecureBackend&) = delete;
  SecureBackend& operator=(const SecureBackend&) = delete;

  const FixedPointParams& params() const { return params_; }
  virtual const HomomorphicOps& ops() const = 0;
  const OpCounters& counters() const { return counters_; }

  // Fresh encryption of x at scale 2^f.
  Ciphertext encrypt(double x);
  // Deterministic encryption of a public value.
  Ciphertext constant(double x) const;
  Ciphertext constant(const EncodedValue& v) const;

  Ciphertext add(const Ciphertext& a, const Ciphertext& b);
  Ciphertext sub(const Ciphertext& a, const Ciphertext& b);
  Ciphertext negate(const Ciphertext& a);
  // Raw residue multiply: the result carries the scales of both factors.
  Ciphertext scalar_mul(const Ciphertext& a, const EncodedValue& k);
  // Multiply by a small signed integer; the scale is unchanged.
  Ciphertext scalar_mul(const Ciphertext& a, long k);

  // Truncated product, scale 2^f.
  std::vector<Ciphertext> mul(std::span<const Ciphertext> a, std::span<const Ciphertext> b);
  Ciphertext mul(const Ciphertext& a, const Ciphertext& b);
  // Scale 2^2f -> 2^f, floor semantics, ±1 ulp.
  std::vector<Ciphertext> truncate(std::span<const Ciphertext> a);
  Ciphertext truncate(const Ciphertext& a);
  // num / den with den > 0 (DomainError otherwise). The numerator may have
  // either sign.
  std::vector<Ciphertext> div(std::span<const Ciphertext> num, std::span<const Ciphertext> den);
  Ciphertext div(const Ciphertext& num, const Ciphertext& den);
  // sqrt(a) for a > 0 (DomainError otherwise).
  std::vector<Ciphertext> sqrt(std::span<const Ciphertext> a);
  Ciphertext sqrt(const Ciphertext& a);
  // [a > 0]. Reveals exactly this bit; zero gives false. Works at any scale.
  std::vector<bool> sign(std::span<const Ciphertext> a);
  bool sign(const Ciphertext& a);
  // Residue of a, learned by the center (used for permitted outputs only).
  std::vector<EncodedValue> reveal(std::span<const Ciphertext> a);
  EncodedValue reveal(const Ciphertext& a);

  // Textbook Cholesky of a symmetric p×p matrix (lower triangle is read).
  // Each pivot is checked first: unless it exceeds 2^−pivot_floor_bits()
  // times its diagonal entry it throws NotPositiveDefinite, since smaller
  // pivots are indistinguishable from rounding. Uses p sqrt, p(p−1)/2 div and (p³−p)/6 products;
  // the rows of one column share each round.
  CipherMatrix cholesky(const CipherMatrix& a);
  int pivot_floor_bits() const;
  // Solves L Lᵀ x = g by forward then backward substitution.
  std::vector<Ciphertext> back_substitute(const CipherMatrix& l, std::span<const Ciphertext> g);
  // (L Lᵀ)⁻¹, one back-substitution per unit vector. All p columns advance
  // together, so rounds grow linearly in p; known zeros of the unit vectors
  // are skipped and only the lower triangle is solved, then mirrored.
  CipherMatrix invert(const CipherMatrix& l);

 protected:
  // Untruncated product Enc(x y) at scale 2^2f.
  virtual std::vector<Ciphertext> do_mul_raw(std::span<const Ciphertext> a,
                                             std::span<const Ciphertext> b) = 0;
  // floor(v / 2^shift) ± 1 for |v| < 2^bound_bits.
  virtual std::vector<Ciphertext> do_truncate(std::span<const Ciphertext> a, int shift,
                                              int bound_bits) = 0;
  virtual std::vector<Ciphertext> do_div(std::span<const Ciphertext> num,
                                         std::span<const Ciphertext> den) = 0;
  virtual std::vector<Ciphertext> do_sqrt(std::span<const Ciphertext> a) = 0;
  virtual std::vector<bool> do_sign(std::span<const Ciphertext> a) = 0;
  virtual std::vector<EncodedValue> do_reveal(std::span<const Ciphertext> a) = 0;

  OpCounters counters_;
  Rng rng_;

 private:
  FixedPointParams params_;
};

}  // namespace privlogit::secure

#endif  // PRIVLOGIT_SECURE_BACKEND_HPP_

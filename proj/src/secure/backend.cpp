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

#include "privlogit/secure/backend.hpp"

#include <algorithm>
#include <string>

#include "privlogit/errors.hpp"

namespace privlogit::secure {

namespace {

void require_same_size(size_t a, size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": operand lengths differ");
}

void require_square(const CipherMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionError(std::string(what) + ": matrix must be square and non-empty");
}

}  // namespace

SecureBackend::SecureBackend(FixedPointParams params, Rng rng)
    : rng_(std::move(rng)), params_(std::move(params)) {
  params_.validate();
}

Ciphertext SecureBackend::encrypt(double x) {
  ++counters_.encryptions;
  return ops().encrypt(privlogit::encode(x, params_), rng_);
}

Ciphertext SecureBackend::constant(double x) const {
  return ops().trivial(privlogit::encode(x, params_));
}

Ciphertext SecureBackend::constant(const EncodedValue& v) const { return ops().trivial(v); }

Ciphertext SecureBackend::add(const Ciphertext& a, const Ciphertext& b) {
  ++counters_.adds;
  return ops().add(a, b);
}

Ciphertext SecureBackend::sub(const Ciphertext& a, const Ciphertext& b) {
  ++counters_.subs;
  return ops().sub(a, b);
}

Ciphertext SecureBackend::negate(const Ciphertext& a) {
  ++counters_.subs;
  return ops().negate(a);
}

Ciphertext SecureBackend::scalar_mul(const Ciphertext& a, const EncodedValue& k) {
  ++counters_.scalar_muls;
  return ops().scalar_mul(a, k);
}

Ciphertext SecureBackend::scalar_mul(const Ciphertext& a, long k) {
  return scalar_mul(a, EncodedValue{wrap(mpz_class(k), params_.modulus)});
}

std::vector<Ciphertext> SecureBackend::mul(std::span<const Ciphertext> a,
                                           std::span<const Ciphertext> b) {
  require_same_size(a.size(), b.size(), "mul");
  if (a.empty()) return {};
  counters_.sec_muls += a.size();
  const auto raw = do_mul_raw(a, b);
  return truncate(raw);
}

Ciphertext SecureBackend::mul(const Ciphertext& a, const Ciphertext& b) {
  return mul(std::span(&a, 1), std::span(&b, 1)).front();
}

std::vector<Ciphertext> SecureBackend::truncate(std::span<const Ciphertext> a) {
  if (a.empty()) return {};
  counters_.truncates += a.size();
  return do_truncate(a, params_.frac_bits, 2 * params_.value_bits());
}

Ciphertext SecureBackend::truncate(const Ciphertext& a) {
  return truncate(std::span(&a, 1)).front();
}

std::vector<Ciphertext> SecureBackend::div(std::span<const Ciphertext> num,
                                           std::span<const Ciphertext> den) {
  require_same_size(num.size(), den.size(), "div");
  if (num.empty()) return {};
  counters_.divs += num.size();
  return do_div(num, den);
}

Ciphertext SecureBackend::div(const Ciphertext& num, const Ciphertext& den) {
  return div(std::span(&num, 1), std::span(&den, 1)).front();
}

std::vector<Ciphertext> SecureBackend::sqrt(std::span<const Ciphertext> a) {
  if (a.empty()) return {};
  counters_.sqrts += a.size();
  return do_sqrt(a);
}

Ciphertext SecureBackend::sqrt(const Ciphertext& a) { return sqrt(std::span(&a, 1)).front(); }

std::vector<bool> SecureBackend::sign(std::span<const Ciphertext> a) {
  if (a.empty()) return {};
  counters_.signs += a.size();
  return do_sign(a);
}

bool SecureBackend::sign(const Ciphertext& a) { return sign(std::span(&a, 1)).front(); }

std::vector<EncodedValue> SecureBackend::reveal(std::span<const Ciphertext> a) {
  if (a.empty()) return {};
  counters_.reveals += a.size();
  return do_reveal(a);
}

EncodedValue SecureBackend::reveal(const Ciphertext& a) {
  return reveal(std::span(&a, 1)).front();
}

int SecureBackend::pivot_floor_bits() const { return std::max(params().frac_bits - 8, 1); }

CipherMatrix SecureBackend::cholesky(const CipherMatrix& a) {
  require_square(a, "cholesky");
  ++counters_.choleskys;
  const size_t p = a.rows();
  CipherMatrix l(p, p, constant(0.0));
  for (size_t j = 0; j < p; ++j) {
    // s_i = a_ij − Σ_{k<j} L_ik L_jk for i ≥ j, all rows in one batch.
    std::vector<Ciphertext> s;
    s.reserve(p - j);
    for (size_t i = j; i < p; ++i) s.push_back(a(i, j));
    if (j > 0) {
      std::vector<Ciphertext> lhs, rhs;
      for (size_t i = j; i < p; ++i) {
        for (size_t k = 0; k < j; ++k) {
          lhs.push_back(l(i, k));
          rhs.push_back(l(j, k));
        }
      }
      const auto prod = mul(lhs, rhs);
      for (size_t i = j; i < p; ++i)
        for (size_t k = 0; k < j; ++k) s[i - j] = sub(s[i - j], prod[(i - j) * j + k]);
    }
    const Ciphertext margin = sub(scalar_mul(s[0], long{1} << pivot_floor_bits()), a(j, j));
    if (!sign(margin))
      throw NotPositiveDefinite("pivot at column " + std::to_string(j) +
                                " is not positive beyond rounding");
    l(j, j) = sqrt(s[0]);
    if (j + 1 < p) {
      const std::vector<Ciphertext> den(p - j - 1, l(j, j));
      const auto q = div(std::span(s).subspan(1), den);
      for (size_t i = j + 1; i < p; ++i) l(i, j) = q[i - j - 1];
    }
  }
  return l;
}

std::vector<Ciphertext> SecureBackend::back_substitute(const CipherMatrix& l,
                                                       std::span<const Ciphertext> g) {
  require_square(l, "back_substitute");
  const size_t p = l.rows();
  if (g.size() != p) throw DimensionError("back_substitute: vector length differs from L");
  ++counters_.back_substitutions;

  // L z = g
  std::vector<Ciphertext> z(p, constant(0.0));
  for (size_t i = 0; i < p; ++i) {
    Ciphertext num = g[i];
    if (i > 0) {
      const auto prod = mul(l.row(i).first(i), std::span<const Ciphertext>(z).first(i));
      for (const auto& t : prod) num = sub(num, t);
    }
    z[i] = div(num, l(i, i));
  }
  // Lᵀ x = z
  std::vector<Ciphertext> x(p, constant(0.0));
  for (size_t ii = p; ii-- > 0;) {
    Ciphertext num = z[ii];
    if (ii + 1 < p) {
      std::vector<Ciphertext> lhs, rhs;
      for (size_t m = ii + 1; m < p; ++m) {
        lhs.push_back(l(m, ii));
        rhs.push_back(x[m]);
      }
      for (const auto& t : mul(lhs, rhs)) num = sub(num, t);
    }
    x[ii] = div(num, l(ii, ii));
  }
  return x;
}

CipherMatrix SecureBackend::invert(const CipherMatrix& l) {
  require_square(l, "invert");
  const size_t p = l.rows();
  ++counters_.inversions;
  counters_.back_substitutions += p;

  const Ciphertext zero = constant(0.0);
  const Ciphertext one = constant(1.0);
  // z[k] solves L z = e_k; entries below k are known zeros and never touched.
  std::vector<std::vector<Ciphertext>> z(p, std::vector<Ciphertext>(p, zero));
  for (size_t i = 0; i < p; ++i) {
    std::vector<Ciphertext> lhs, rhs;
    for (size_t k = 0; k < i; ++k) {
      for (size_t m = k; m < i; ++m) {
        lhs.push_back(l(i, m));
        rhs.push_back(z[k][m]);
      }
    }
    const auto prod = mul(lhs, rhs);
    std::vector<Ciphertext> num;
    num.reserve(i + 1);
    size_t at = 0;
    for (size_t k = 0; k < i; ++k) {
      Ciphertext acc = zero;
      for (size_t m = k; m < i; ++m) acc = sub(acc, prod[at++]);
      num.push_back(acc);
    }
    num.push_back(one);
    const std::vector<Ciphertext> den(i + 1, l(i, i));
    const auto q = div(num, den);
    for (size_t k = 0; k <= i; ++k) z[k][i] = q[k];
  }

  // Lᵀ x = z[k], solved for rows i ≥ k only; the rest follows by symmetry.
  std::vector<std::vector<Ciphertext>> x(p, std::vector<Ciphertext>(p, zero));
  for (size_t i = p; i-- > 0;) {
    std::vector<Ciphertext> lhs, rhs;
    for (size_t k = 0; k <= i; ++k) {
      for (size_t m = i + 1; m < p; ++m) {
        lhs.push_back(l(m, i));
        rhs.push_back(x[k][m]);
      }
    }
    const auto prod = mul(lhs, rhs);
    std::vector<Ciphertext> num;
    num.reserve(i + 1);
    size_t at = 0;
    for (size_t k = 0; k <= i; ++k) {
      Ciphertext acc = z[k][i];
      for (size_t m = i + 1; m < p; ++m) acc = sub(acc, prod[at++]);
      num.push_back(acc);
    }
    const std::vector<Ciphertext> den(i + 1, l(i, i));
    const auto q = div(num, den);
    for (size_t k = 0; k <= i; ++k) x[k][i] = q[k];
  }

  CipherMatrix inv(p, p, zero);
  for (size_t k = 0; k < p; ++k) {
    for (size_t i = k; i < p; ++i) {
      inv(i, k) = x[k][i];
      inv(k, i) = x[k][i];
    }
  }
  return inv;
}

}  // namespace privlogit::secure

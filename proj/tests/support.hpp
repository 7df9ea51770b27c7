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

#ifndef PRIVLOGIT_TESTS_SUPPORT_HPP_
#define PRIVLOGIT_TESTS_SUPPORT_HPP_

#include <cmath>

#include "privlogit/core/dataset.hpp"
#include "privlogit/core/logistic.hpp"
#include "privlogit/crypto/paillier.hpp"
#include "privlogit/random.hpp"

namespace privlogit::testing {

// Gaussian features, labels drawn from a logistic model with coefficients
// uniform in [-scale, scale].
inline Dataset random_dataset(Eigen::Index n, Eigen::Index p, uint64_t seed,
                              double scale = 1.0) {
  Rng rng(seed);
  Matrix x(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) x(i, j) = rng.normal();
  Vector beta(p);
  for (Eigen::Index j = 0; j < p; ++j) beta(j) = rng.uniform(-scale, scale);
  Vector y(n);
  for (Eigen::Index i = 0; i < n; ++i)
    y(i) = rng.bernoulli(sigmoid(x.row(i).dot(beta))) ? 1.0 : 0.0;
  return Dataset(std::move(x), std::move(y));
}

// B Bᵀ / p + shift·I for Gaussian B: symmetric positive definite.
inline Matrix random_spd(Eigen::Index p, uint64_t seed, double shift = 0.5) {
  Rng rng(seed);
  Matrix b(p, p);
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < p; ++j) b(i, j) = rng.normal();
  Matrix a = b * b.transpose() / static_cast<double>(p);
  a.diagonal().array() += shift;
  return a;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Shared 1024-bit test key, generated once per process from a fixed seed.
inline const paillier::KeyPair& test_key() {
  static const paillier::KeyPair kp = [] {
    Rng rng(20240601);
    return paillier::keygen(1024, rng);
  }();
  return kp;
}

inline FixedPointParams test_params() { return FixedPointParams::for_modulus(test_key().pub.n); }

}  // namespace privlogit::testing

#endif  // PRIVLOGIT_TESTS_SUPPORT_HPP_

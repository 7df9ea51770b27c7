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

#include "privlogit/core/logistic.hpp"

#include <cmath>

#include "privlogit/core/kernels.hpp"
#include "privlogit/errors.hpp"

namespace privlogit {

namespace {

void check_beta(const Dataset& data, const Vector& beta) {
  if (beta.size() != data.cols()) {
    throw DimensionError("coefficient vector has " + std::to_string(beta.size()) +
                         " entries, dataset has " + std::to_string(data.cols()) +
                         " columns");
  }
}

}  // namespace

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double log1p_exp(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

double log_likelihood(const Dataset& data, const Vector& beta, double lambda) {
  check_beta(data, beta);
  const Vector eta = kernels::parallel::times(data.x(), beta);
  return kernels::parallel::bernoulli_loglik(eta, data.y()) -
         0.5 * lambda * beta.squaredNorm();
}

Vector gradient(const Dataset& data, const Vector& beta, double lambda) {
  check_beta(data, beta);
  Vector resid = kernels::parallel::times(data.x(), beta);
  for (Eigen::Index i = 0; i < resid.size(); ++i)
    resid[i] = data.y()[i] - sigmoid(resid[i]);
  return kernels::parallel::transpose_times(data.x(), resid) - lambda * beta;
}

Matrix hessian(const Dataset& data, const Vector& beta, double lambda) {
  check_beta(data, beta);
  Vector w = kernels::parallel::times(data.x(), beta);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const double p = sigmoid(w[i]);
    w[i] = p * (1.0 - p);
  }
  Matrix h = -kernels::parallel::weighted_gram(data.x(), w);
  h.diagonal().array() -= lambda;
  return h;
}

Matrix approx_hessian(const Dataset& data, double lambda) {
  Matrix h = -0.25 * kernels::parallel::gram(data.x());
  h.diagonal().array() -= lambda;
  return h;
}

}  // namespace privlogit

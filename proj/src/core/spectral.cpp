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

#include "privlogit/core/spectral.hpp"

#include <algorithm>
#include <limits>

#include "privlogit/core/kernels.hpp"
#include "privlogit/core/logistic.hpp"
#include "privlogit/errors.hpp"

namespace privlogit {

SpectralBounds spectral_bounds(const Dataset& data, double lambda, const Vector& at) {
  return spectral_bounds(data, lambda, std::span<const Vector>(&at, 1));
}

SpectralBounds spectral_bounds(const Dataset& data, double lambda,
                               std::span<const Vector> points) {
  if (points.empty()) throw DimensionError("need at least one evaluation point");
  Vector w = Vector::Constant(data.rows(), std::numeric_limits<double>::infinity());
  for (const auto& beta : points) {
    if (beta.size() != data.cols()) throw DimensionError("coefficient length mismatch");
    const Vector eta = kernels::parallel::times(data.x(), beta);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      const double p = sigmoid(eta[i]);
      w[i] = std::min(w[i], p * (1.0 - p));
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram_eig(
      Eigen::MatrixXd(kernels::parallel::gram(data.x())), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> weighted_eig(
      Eigen::MatrixXd(kernels::parallel::weighted_gram(data.x(), w)), Eigen::EigenvaluesOnly);

  SpectralBounds out;
  out.big_m = 0.25 * gram_eig.eigenvalues().maxCoeff() + lambda;
  out.small_m = weighted_eig.eigenvalues().minCoeff() + lambda;
  return out;
}

}  // namespace privlogit

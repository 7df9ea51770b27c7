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

#include "privlogit/core/optimizer.hpp"

#include <cmath>
#include <string>

#include "privlogit/core/cholesky.hpp"
#include "privlogit/core/logistic.hpp"
#include "privlogit/errors.hpp"

namespace privlogit {

void ModelConfig::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw ConfigError("lambda must be finite and >= 0");
  if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (beta0 && !beta0->allFinite()) throw ConfigError("beta0 must be finite");
}

Vector ModelConfig::initial_beta(Eigen::Index p) const {
  if (!beta0) return Vector::Zero(p);
  if (beta0->size() != p) throw DimensionError("beta0 length mismatch");
  return *beta0;
}

bool converged(double l_prev, double l_curr, double tol) {
  if (l_prev == 0.0) return l_curr == 0.0;
  return std::abs(l_curr - l_prev) / std::abs(l_prev) < tol;
}

namespace {

template <class StepFn>
FitResult iterate(const Dataset& data, const ModelConfig& cfg, StepFn&& step) {
  FitResult out;
  out.beta = cfg.initial_beta(data.cols());
  double l = log_likelihood(data, out.beta, cfg.lambda);
  out.likelihood_trace.push_back(l);
  out.beta_trace.push_back(out.beta);
  for (int it = 1; it <= cfg.max_iter; ++it) {
    out.beta += step(out.beta);
    const double next = log_likelihood(data, out.beta, cfg.lambda);
    if (!std::isfinite(next) || !out.beta.allFinite())
      throw Diverged("objective became non-finite at iteration " + std::to_string(it));
    out.likelihood_trace.push_back(next);
    out.beta_trace.push_back(out.beta);
    out.iterations = it;
    if (converged(l, next, cfg.tol)) {
      out.converged = true;
      break;
    }
    l = next;
  }
  return out;
}

}  // namespace

FitResult newton_fit(const Dataset& data, const ModelConfig& cfg) {
  cfg.validate();
  return iterate(data, cfg, [&](const Vector& beta) {
    const Matrix neg_h = -hessian(data, beta, cfg.lambda);
    try {
      return Vector(solve_via_cholesky(cholesky(neg_h), gradient(data, beta, cfg.lambda)));
    } catch (const NotPositiveDefinite& e) {
      throw Diverged(std::string("Newton step failed: ") + e.what());
    }
  });
}

FitResult privlogit_fit(const Dataset& data, const ModelConfig& cfg) {
  cfg.validate();
  // (−H̃) = L Lᵀ, so −H̃⁻¹ g = (L Lᵀ)⁻¹ g.
  const LowerTriangular l = [&] {
    try {
      return cholesky(-approx_hessian(data, cfg.lambda));
    } catch (const NotPositiveDefinite& e) {
      throw ConfigError(std::string("approximate Hessian is singular (") + e.what() +
                        "); use lambda > 0 or drop collinear columns");
    }
  }();
  return iterate(data, cfg, [&](const Vector& beta) {
    return solve_via_cholesky(l, gradient(data, beta, cfg.lambda));
  });
}

}  // namespace privlogit

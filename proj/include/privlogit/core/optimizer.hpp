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

#ifndef PRIVLOGIT_CORE_OPTIMIZER_HPP_
#define PRIVLOGIT_CORE_OPTIMIZER_HPP_

#include <optional>
#include <vector>

#include "privlogit/core/dataset.hpp"

namespace privlogit {

struct ModelConfig {
  double lambda = 0.0;
  double tol = 1e-6;
  int max_iter = 500;
  // Starting point; all-zero when unset.
  std::optional<Vector> beta0;

  void validate() const;
  Vector initial_beta(Eigen::Index p) const;
};

struct FitResult {
  Vector beta;
  int iterations = 0;
  bool converged = false;
  // Objective at β⁽⁰⁾, β⁽¹⁾, ..., β⁽iterations⁾.
  std::vector<double> likelihood_trace;
  // The iterates themselves, same indexing as likelihood_trace.
  std::vector<Vector> beta_trace;
};

// |l_curr − l_prev| / |l_prev| < tol. Strict: a change exactly at the
// threshold does not count as converged. l_prev == 0 converges only when
// l_curr == 0 too.
bool converged(double l_prev, double l_curr, double tol);

// Pure Newton: β ← β − H(β)⁻¹ g(β), Hessian refactored every iteration, no
// damping. Throws Diverged when −H(β) is not positive definite or the
// objective stops being finite.
FitResult newton_fit(const Dataset& data, const ModelConfig& cfg);

// Constant-Hessian iteration β ← β − H̃⁻¹ g(β). H̃ is built and factored once.
// Throws ConfigError when −H̃ is singular (rank-deficient X with λ = 0).
FitResult privlogit_fit(const Dataset& data, const ModelConfig& cfg);

}  // namespace privlogit

#endif  // PRIVLOGIT_CORE_OPTIMIZER_HPP_

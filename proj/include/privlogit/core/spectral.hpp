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

#ifndef PRIVLOGIT_CORE_SPECTRAL_HPP_
#define PRIVLOGIT_CORE_SPECTRAL_HPP_

#include <span>

#include "privlogit/core/dataset.hpp"

namespace privlogit {

// Curvature bounds of the log-likelihood used by the linear-rate guarantee:
//   big_m   = λ_max(XᵀX)/4 + λ
//   small_m = λ_min(XᵀAX) + λ
struct SpectralBounds {
  double big_m = 0.0;
  double small_m = 0.0;

  // 1 − m/M: the per-iteration contraction of the optimality gap.
  double rate() const { return 1.0 - small_m / big_m; }
};

// small_m evaluated at a single point β.
SpectralBounds spectral_bounds(const Dataset& data, double lambda, const Vector& at);

// small_m valid on every segment joining any two of `points`: the weights
// a_ii are replaced by their minimum over the points. Each p(1−p) is
// unimodal in the linear predictor, so along a segment it never drops below
// its smaller endpoint value.
SpectralBounds spectral_bounds(const Dataset& data, double lambda,
                               std::span<const Vector> points);

}  // namespace privlogit

#endif  // PRIVLOGIT_CORE_SPECTRAL_HPP_

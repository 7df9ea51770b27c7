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

#ifndef PRIVLOGIT_CORE_LOGISTIC_HPP_
#define PRIVLOGIT_CORE_LOGISTIC_HPP_

#include "privlogit/core/dataset.hpp"

namespace privlogit {

// 1 / (1 + e^{-z}), evaluated without overflow for any finite z.
double sigmoid(double z);

// log(1 + e^z) without overflow.
double log1p_exp(double z);

// ℓ2-regularised log-likelihood
//   Σ_i [y_i βᵀx_i − log(1 + e^{βᵀx_i})] − (λ/2) βᵀβ.
// With lambda = 0 on a partition this is that organisation's likelihood share.
double log_likelihood(const Dataset& data, const Vector& beta, double lambda);

// Xᵀ(y − p) − λβ.
Vector gradient(const Dataset& data, const Vector& beta, double lambda);

// −XᵀAX − λI with A = diag(p_i (1 − p_i)).
Matrix hessian(const Dataset& data, const Vector& beta, double lambda);

// Constant curvature bound −¼XᵀX − λI. Does not depend on β.
Matrix approx_hessian(const Dataset& data, double lambda);

}  // namespace privlogit

#endif  // PRIVLOGIT_CORE_LOGISTIC_HPP_

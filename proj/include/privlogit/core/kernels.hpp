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

#ifndef PRIVLOGIT_CORE_KERNELS_HPP_
#define PRIVLOGIT_CORE_KERNELS_HPP_

#include "privlogit/core/dataset.hpp"

// Data-parallel row reductions behind the logistic-regression math.
//
// `serial` holds straightforward single-loop reference versions kept for
// testing and benchmarking. `parallel` splits the rows into fixed-size blocks
// (independent of the thread count), reduces each block under OpenMP and
// combines the block partials in block order, so its results are bit-for-bit
// reproducible for a given input whatever OMP_NUM_THREADS is.
namespace privlogit::kernels {

// Rows per reduction block in the parallel kernels.
inline constexpr Eigen::Index kBlockRows = 512;

namespace serial {

// Xᵀ X.
Matrix gram(const Matrix& x);
// Xᵀ diag(w) X.
Matrix weighted_gram(const Matrix& x, const Vector& w);
// Xᵀ v.
Vector transpose_times(const Matrix& x, const Vector& v);
// X b.
Vector times(const Matrix& x, const Vector& b);
// Σ_i [y_i η_i − log(1 + e^{η_i})].
double bernoulli_loglik(const Vector& eta, const Vector& y);

}  // namespace serial

namespace parallel {

Matrix gram(const Matrix& x);
Matrix weighted_gram(const Matrix& x, const Vector& w);
Vector transpose_times(const Matrix& x, const Vector& v);
Vector times(const Matrix& x, const Vector& b);
double bernoulli_loglik(const Vector& eta, const Vector& y);

}  // namespace parallel

// Number of threads the parallel kernels will use.
int max_threads();

}  // namespace privlogit::kernels

#endif  // PRIVLOGIT_CORE_KERNELS_HPP_

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

#ifndef PRIVLOGIT_CORE_CHOLESKY_HPP_
#define PRIVLOGIT_CORE_CHOLESKY_HPP_

#include "privlogit/core/dataset.hpp"

namespace privlogit {

// Lower-triangular factor with a strictly positive diagonal.
class LowerTriangular {
 public:
  // Validates shape, zero strict upper triangle and positive diagonal.
  explicit LowerTriangular(Matrix l);

  const Matrix& matrix() const { return l_; }
  Eigen::Index size() const { return l_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return l_(i, j); }

  // L Lᵀ.
  Matrix reconstruct() const { return l_ * l_.transpose(); }

 private:
  Matrix l_;
};

// Relative pivot floor: a pivot must exceed this times the largest diagonal
// entry of the input.
inline constexpr double kPivotRelativeFloor = 1e-12;

// Textbook (Cholesky–Banachiewicz) factorisation of a symmetric positive
// definite matrix. Only the lower triangle of `a` is read.
// Throws NotPositiveDefinite when a pivot falls below the floor.
LowerTriangular cholesky(const Matrix& a);

// Solves (L Lᵀ) x = g by forward then backward substitution.
Vector solve_via_cholesky(const LowerTriangular& l, const Vector& g);

}  // namespace privlogit

#endif  // PRIVLOGIT_CORE_CHOLESKY_HPP_

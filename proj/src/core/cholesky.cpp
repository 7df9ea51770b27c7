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

#include "privlogit/core/cholesky.hpp"

#include <cmath>
#include <string>

#include "privlogit/errors.hpp"

namespace privlogit {

LowerTriangular::LowerTriangular(Matrix l) : l_(std::move(l)) {
  if (l_.rows() != l_.cols() || l_.rows() < 1)
    throw DimensionError("triangular factor must be square and non-empty");
  for (Eigen::Index i = 0; i < l_.rows(); ++i) {
    if (!(l_(i, i) > 0.0))
      throw SingularMatrix("triangular factor has a non-positive diagonal at " +
                           std::to_string(i));
    for (Eigen::Index j = i + 1; j < l_.cols(); ++j) {
      if (l_(i, j) != 0.0)
        throw DimensionError("triangular factor has a non-zero upper entry");
    }
  }
}

LowerTriangular cholesky(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw DimensionError("cholesky needs a non-empty square matrix");
  const Eigen::Index p = a.rows();
  const double floor = kPivotRelativeFloor * a.diagonal().maxCoeff();
  Matrix l = Matrix::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    double d = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > floor) || !(d > 0.0)) {
      throw NotPositiveDefinite("pivot " + std::to_string(j) + " is " +
                                std::to_string(d) +
                                "; matrix is not positive definite");
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < p; ++i) {
      double s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return LowerTriangular(std::move(l));
}

Vector solve_via_cholesky(const LowerTriangular& l, const Vector& g) {
  const Eigen::Index p = l.size();
  if (g.size() != p) throw DimensionError("right-hand side length mismatch");
  // L z = g
  Vector z(p);
  for (Eigen::Index i = 0; i < p; ++i) {
    double s = g[i];
    for (Eigen::Index k = 0; k < i; ++k) s -= l(i, k) * z[k];
    z[i] = s / l(i, i);
  }
  // Lᵀ x = z
  Vector x(p);
  for (Eigen::Index i = p - 1; i >= 0; --i) {
    double s = z[i];
    for (Eigen::Index k = i + 1; k < p; ++k) s -= l(k, i) * x[k];
    x[i] = s / l(i, i);
  }
  return x;
}

}  // namespace privlogit

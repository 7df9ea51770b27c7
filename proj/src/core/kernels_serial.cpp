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

#include "privlogit/core/kernels.hpp"
#include "privlogit/core/logistic.hpp"
#include "privlogit/errors.hpp"

namespace privlogit::kernels::serial {

Matrix gram(const Matrix& x) {
  return weighted_gram(x, Vector::Ones(x.rows()));
}

Matrix weighted_gram(const Matrix& x, const Vector& w) {
  if (w.size() != x.rows()) throw DimensionError("weight length mismatch");
  const Eigen::Index p = x.cols();
  Matrix out = Matrix::Zero(p, p);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index a = 0; a < p; ++a) {
      const double xa = w[i] * x(i, a);
      for (Eigen::Index b = a; b < p; ++b) out(a, b) += xa * x(i, b);
    }
  }
  for (Eigen::Index a = 0; a < p; ++a)
    for (Eigen::Index b = 0; b < a; ++b) out(a, b) = out(b, a);
  return out;
}

Vector transpose_times(const Matrix& x, const Vector& v) {
  if (v.size() != x.rows()) throw DimensionError("vector length mismatch");
  Vector out = Vector::Zero(x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index a = 0; a < x.cols(); ++a) out[a] += x(i, a) * v[i];
  return out;
}

Vector times(const Matrix& x, const Vector& b) {
  if (b.size() != x.cols()) throw DimensionError("coefficient length mismatch");
  Vector out(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    double s = 0.0;
    for (Eigen::Index a = 0; a < x.cols(); ++a) s += x(i, a) * b[a];
    out[i] = s;
  }
  return out;
}

double bernoulli_loglik(const Vector& eta, const Vector& y) {
  if (eta.size() != y.size()) throw DimensionError("response length mismatch");
  double s = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i)
    s += y[i] * eta[i] - log1p_exp(eta[i]);
  return s;
}

}  // namespace privlogit::kernels::serial

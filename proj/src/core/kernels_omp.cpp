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

#include <omp.h>

#include <vector>

#include "privlogit/core/kernels.hpp"
#include "privlogit/core/logistic.hpp"
#include "privlogit/errors.hpp"

namespace privlogit::kernels {

namespace {

Eigen::Index block_count(Eigen::Index n) {
  return (n + kBlockRows - 1) / kBlockRows;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

namespace parallel {

Matrix gram(const Matrix& x) {
  return weighted_gram(x, Vector::Ones(x.rows()));
}

Matrix weighted_gram(const Matrix& x, const Vector& w) {
  if (w.size() != x.rows()) throw DimensionError("weight length mismatch");
  const Eigen::Index n = x.rows(), p = x.cols();
  const Eigen::Index nb = block_count(n);
  std::vector<Matrix> partial(static_cast<size_t>(nb));

#pragma omp parallel for schedule(static)
  for (Eigen::Index blk = 0; blk < nb; ++blk) {
    Matrix acc = Matrix::Zero(p, p);
    const Eigen::Index end = std::min(n, (blk + 1) * kBlockRows);
    for (Eigen::Index i = blk * kBlockRows; i < end; ++i) {
      for (Eigen::Index a = 0; a < p; ++a) {
        const double xa = w[i] * x(i, a);
        for (Eigen::Index b = a; b < p; ++b) acc(a, b) += xa * x(i, b);
      }
    }
    partial[static_cast<size_t>(blk)] = std::move(acc);
  }

  Matrix out = Matrix::Zero(p, p);
  for (const auto& m : partial) out += m;
  for (Eigen::Index a = 0; a < p; ++a)
    for (Eigen::Index b = 0; b < a; ++b) out(a, b) = out(b, a);
  return out;
}

Vector transpose_times(const Matrix& x, const Vector& v) {
  if (v.size() != x.rows()) throw DimensionError("vector length mismatch");
  const Eigen::Index n = x.rows(), p = x.cols();
  const Eigen::Index nb = block_count(n);
  std::vector<Vector> partial(static_cast<size_t>(nb));

#pragma omp parallel for schedule(static)
  for (Eigen::Index blk = 0; blk < nb; ++blk) {
    Vector acc = Vector::Zero(p);
    const Eigen::Index end = std::min(n, (blk + 1) * kBlockRows);
    for (Eigen::Index i = blk * kBlockRows; i < end; ++i)
      for (Eigen::Index a = 0; a < p; ++a) acc[a] += x(i, a) * v[i];
    partial[static_cast<size_t>(blk)] = std::move(acc);
  }

  Vector out = Vector::Zero(p);
  for (const auto& s : partial) out += s;
  return out;
}

Vector times(const Matrix& x, const Vector& b) {
  if (b.size() != x.cols()) throw DimensionError("coefficient length mismatch");
  Vector out(x.rows());
  // Row-independent: no reduction across rows, order is irrelevant.
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    double s = 0.0;
    for (Eigen::Index a = 0; a < x.cols(); ++a) s += x(i, a) * b[a];
    out[i] = s;
  }
  return out;
}

double bernoulli_loglik(const Vector& eta, const Vector& y) {
  if (eta.size() != y.size()) throw DimensionError("response length mismatch");
  const Eigen::Index n = eta.size();
  const Eigen::Index nb = block_count(n);
  std::vector<double> partial(static_cast<size_t>(nb), 0.0);

#pragma omp parallel for schedule(static)
  for (Eigen::Index blk = 0; blk < nb; ++blk) {
    double s = 0.0;
    const Eigen::Index end = std::min(n, (blk + 1) * kBlockRows);
    for (Eigen::Index i = blk * kBlockRows; i < end; ++i)
      s += y[i] * eta[i] - log1p_exp(eta[i]);
    partial[static_cast<size_t>(blk)] = s;
  }

  double out = 0.0;
  for (double s : partial) out += s;
  return out;
}

}  // namespace parallel
}  // namespace privlogit::kernels

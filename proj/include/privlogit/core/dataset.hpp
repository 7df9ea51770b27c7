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

#ifndef PRIVLOGIT_CORE_DATASET_HPP_
#define PRIVLOGIT_CORE_DATASET_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace privlogit {

// Row-major so that a horizontal partition is a contiguous row range and the
// per-row kernels stream memory in order.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// Covariates x (n x p) and binary response y (n). Validated on construction:
// n, p >= 1, finite x, y in {0, 1}.
class Dataset {
 public:
  Dataset(Matrix x, Vector y);

  const Matrix& x() const { return x_; }
  const Vector& y() const { return y_; }
  Eigen::Index rows() const { return x_.rows(); }
  Eigen::Index cols() const { return x_.cols(); }

  // Rows picked by index, in the given order.
  Dataset select_rows(const std::vector<Eigen::Index>& rows) const;

  // Concatenates datasets with the same column count.
  static Dataset stack(const std::vector<Dataset>& parts);

 private:
  Matrix x_;
  Vector y_;
};

}  // namespace privlogit

#endif  // PRIVLOGIT_CORE_DATASET_HPP_

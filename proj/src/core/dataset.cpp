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

#include "privlogit/core/dataset.hpp"

#include <cmath>
#include <string>

#include "privlogit/errors.hpp"

namespace privlogit {

Dataset::Dataset(Matrix x, Vector y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.rows() < 1 || x_.cols() < 1) {
    throw DimensionError("dataset needs at least one row and one column");
  }
  if (y_.size() != x_.rows()) {
    throw DimensionError("response length " + std::to_string(y_.size()) +
                         " does not match " + std::to_string(x_.rows()) +
                         " covariate rows");
  }
  if (!x_.allFinite()) throw ConfigError("covariates contain non-finite values");
  for (Eigen::Index i = 0; i < y_.size(); ++i) {
    if (y_[i] != 0.0 && y_[i] != 1.0) {
      throw ConfigError("response at row " + std::to_string(i) +
                        " is not in {0, 1}");
    }
  }
}

Dataset Dataset::select_rows(const std::vector<Eigen::Index>& rows) const {
  Matrix x(static_cast<Eigen::Index>(rows.size()), x_.cols());
  Vector y(static_cast<Eigen::Index>(rows.size()));
  for (size_t k = 0; k < rows.size(); ++k) {
    const auto r = rows[k];
    if (r < 0 || r >= x_.rows()) throw DimensionError("row index out of range");
    x.row(static_cast<Eigen::Index>(k)) = x_.row(r);
    y[static_cast<Eigen::Index>(k)] = y_[r];
  }
  return Dataset(std::move(x), std::move(y));
}

Dataset Dataset::stack(const std::vector<Dataset>& parts) {
  if (parts.empty()) throw EmptyInput("nothing to stack");
  Eigen::Index n = 0;
  const Eigen::Index p = parts.front().cols();
  for (const auto& d : parts) {
    if (d.cols() != p) throw DimensionError("column counts differ");
    n += d.rows();
  }
  Matrix x(n, p);
  Vector y(n);
  Eigen::Index at = 0;
  for (const auto& d : parts) {
    x.middleRows(at, d.rows()) = d.x();
    y.segment(at, d.rows()) = d.y();
    at += d.rows();
  }
  return Dataset(std::move(x), std::move(y));
}

}  // namespace privlogit

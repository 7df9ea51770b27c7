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

#include "privlogit/harness/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "privlogit/core/logistic.hpp"
#include "privlogit/errors.hpp"
#include "privlogit/random.hpp"

namespace privlogit::harness {

SimSpec SimSpec::parse(const std::string& triple) {
  std::stringstream ss(triple);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (parts.size() != 3) throw ConfigError("--simulate expects n,p,seed");
  try {
    size_t used = 0;
    SimSpec s;
    s.n = std::stol(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("n");
    s.p = std::stol(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("p");
    s.seed = std::stoull(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("seed");
    if (s.p < 1 || s.n < s.p) throw ConfigError("simulation needs n >= p >= 1");
    return s;
  } catch (const std::logic_error&) {
    throw ConfigError("--simulate expects integers n,p,seed, got '" + triple + "'");
  }
}

Vector simulation_beta(const SimSpec& spec) {
  if (spec.beta_true) {
    if (spec.beta_true->size() != spec.p) throw DimensionError("beta_true length differs from p");
    return *spec.beta_true;
  }
  Rng rng = Rng(spec.seed).fork(1);
  Vector beta(spec.p);
  for (Eigen::Index j = 0; j < spec.p; ++j) beta(j) = rng.uniform(-1.0, 1.0);
  return beta;
}

Dataset simulate(const SimSpec& spec) {
  if (spec.p < 1 || spec.n < spec.p) throw ConfigError("simulation needs n >= p >= 1");
  const Vector beta = simulation_beta(spec);
  Rng rng = Rng(spec.seed).fork(2);
  Matrix x(spec.n, spec.p);
  Vector y(spec.n);
  for (Eigen::Index i = 0; i < spec.n; ++i) {
    for (Eigen::Index j = 0; j < spec.p; ++j) x(i, j) = rng.normal();
    y(i) = rng.bernoulli(sigmoid(x.row(i).dot(beta))) ? 1.0 : 0.0;
  }
  return Dataset(std::move(x), std::move(y));
}

std::vector<Dataset> partition(const Dataset& data, int s, uint64_t seed) {
  if (s < 2 || s > 64) throw PartitionError("partition count must be in [2, 64]");
  const Eigen::Index n = data.rows();
  if (s > n) throw PartitionError("cannot split " + std::to_string(n) + " rows into " +
                                  std::to_string(s) + " non-empty blocks");
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Dataset> out;
  auto it = order.begin();
  for (int j = 0; j < s; ++j) {
    const Eigen::Index len = n / s + (j < n % s ? 1 : 0);
    std::vector<Eigen::Index> rows(it, it + len);
    std::sort(rows.begin(), rows.end());
    out.push_back(data.select_rows(rows));
    it += len;
  }
  return out;
}

}  // namespace privlogit::harness

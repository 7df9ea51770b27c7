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

#ifndef PRIVLOGIT_HARNESS_SIMULATE_HPP_
#define PRIVLOGIT_HARNESS_SIMULATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "privlogit/core/dataset.hpp"

namespace privlogit::harness {

struct SimSpec {
  Eigen::Index n = 1000;
  Eigen::Index p = 10;
  uint64_t seed = 0;
  // Drawn uniformly from [−1, 1] when unset.
  std::optional<Vector> beta_true;

  // "n,p,seed"; throws ConfigError.
  static SimSpec parse(const std::string& triple);
};

// Standard normal covariates, yᵢ ~ Bernoulli(sigmoid(β_trueᵀxᵢ)). A pure
// function of the spec.
Dataset simulate(const SimSpec& spec);

// The coefficients simulate() used.
Vector simulation_beta(const SimSpec& spec);

// 2 ≤ s ≤ 64 disjoint row blocks covering the data, sizes differing by at
// most one, rows assigned by a seeded shuffle. Throws PartitionError.
std::vector<Dataset> partition(const Dataset& data, int s, uint64_t seed);

}  // namespace privlogit::harness

#endif  // PRIVLOGIT_HARNESS_SIMULATE_HPP_

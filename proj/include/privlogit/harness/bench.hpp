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

#ifndef PRIVLOGIT_HARNESS_BENCH_HPP_
#define PRIVLOGIT_HARNESS_BENCH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "privlogit/core/dataset.hpp"
#include "privlogit/protocol/session.hpp"
#include "privlogit/secure/op_counters.hpp"

namespace privlogit::harness {

enum class Method { kPlainNewton, kPlainPrivLogit, kSecureNewton, kPrivLogitHessian, kPrivLogitLocal };

const char* method_name(Method m);
Method parse_method(const std::string& s);
// Comma-separated list; "all" selects every method.
std::vector<Method> parse_methods(const std::string& list);
bool is_secure(Method m);

struct BenchConfig {
  // s_nodes, lambda, tol, max_iter, key_bits and seed are used; protocol is
  // set per method.
  protocol::SessionConfig session;
  protocol::SessionOptions options;
  std::vector<Method> methods;
  uint64_t partition_seed = 0;
};

struct MethodEntry {
  Method method = Method::kPlainNewton;
  bool ok = false;
  std::string error;
  int iterations = 0;
  bool converged = false;
  double setup_seconds = 0.0;
  double total_seconds = 0.0;
  secure::OpCounters counters;
  uint64_t bytes = 0;
  Vector beta;
  std::optional<double> r2_vs_newton;
  // secure-newton total / this method's total.
  std::optional<double> speedup;
};

struct BenchReport {
  std::string dataset;
  Eigen::Index n = 0;
  Eigen::Index p = 0;
  int nodes = 0;
  uint64_t seed = 0;
  double lambda = 0.0;
  double tol = 0.0;
  int key_bits = 0;
  double keygen_seconds = 0.0;
  std::vector<MethodEntry> entries;

  const MethodEntry* find(Method m) const;
};

// Squared Pearson correlation of two coefficient vectors, in [0, 1]. When
// either vector has no spread the uncentered cosine is squared instead; two
// zero vectors give 1.
double r_squared(const Vector& a, const Vector& b);

// Runs each method in order on the same data, partition and key. A failing
// method is recorded and the rest still run. R² is against plain Newton,
// which is fitted for reference even when not requested.
BenchReport bench(const Dataset& data, const std::string& descriptor, const BenchConfig& cfg);

}  // namespace privlogit::harness

#endif  // PRIVLOGIT_HARNESS_BENCH_HPP_

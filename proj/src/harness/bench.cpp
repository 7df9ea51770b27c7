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

#include "privlogit/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "privlogit/core/optimizer.hpp"
#include "privlogit/errors.hpp"
#include "privlogit/harness/simulate.hpp"

namespace privlogit::harness {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Method kAll[] = {Method::kPlainNewton, Method::kPlainPrivLogit, Method::kSecureNewton,
                           Method::kPrivLogitHessian, Method::kPrivLogitLocal};

protocol::ProtocolKind protocol_for(Method m) {
  switch (m) {
    case Method::kSecureNewton:
      return protocol::ProtocolKind::kSecureNewton;
    case Method::kPrivLogitHessian:
      return protocol::ProtocolKind::kPrivLogitHessian;
    case Method::kPrivLogitLocal:
      return protocol::ProtocolKind::kPrivLogitLocal;
    default:
      throw ConfigError(std::string(method_name(m)) + " is not a secure protocol");
  }
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kPlainNewton: return "plain-newton";
    case Method::kPlainPrivLogit: return "plain-privlogit";
    case Method::kSecureNewton: return "secure-newton";
    case Method::kPrivLogitHessian: return "privlogit-hessian";
    case Method::kPrivLogitLocal: return "privlogit-local";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  for (Method m : kAll)
    if (s == method_name(m)) return m;
  throw ConfigError("unknown method '" + s + "'");
}

std::vector<Method> parse_methods(const std::string& list) {
  if (list == "all") return {std::begin(kAll), std::end(kAll)};
  std::vector<Method> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_method(item));
  return out;
}

bool is_secure(Method m) { return m != Method::kPlainNewton && m != Method::kPlainPrivLogit; }

const MethodEntry* BenchReport::find(Method m) const {
  for (const auto& e : entries)
    if (e.method == m) return &e;
  return nullptr;
}

double r_squared(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("r_squared: length mismatch");
  if (a.size() == 0) return 1.0;
  Vector da = a.array() - a.mean();
  Vector db = b.array() - b.mean();
  if (da.squaredNorm() == 0.0 || db.squaredNorm() == 0.0) {
    // No spread to correlate (e.g. p = 1): use the uncentered cosine.
    da = a;
    db = b;
  }
  const double saa = da.squaredNorm(), sbb = db.squaredNorm();
  if (saa == 0.0 || sbb == 0.0) return saa == sbb ? 1.0 : 0.0;
  const double r = da.dot(db) / std::sqrt(saa * sbb);
  return std::clamp(r * r, 0.0, 1.0);
}

BenchReport bench(const Dataset& data, const std::string& descriptor, const BenchConfig& cfg) {
  BenchReport rep;
  rep.dataset = descriptor;
  rep.n = data.rows();
  rep.p = data.cols();
  rep.nodes = cfg.session.s_nodes;
  rep.seed = cfg.session.seed;
  rep.lambda = cfg.session.lambda;
  rep.tol = cfg.session.tol;
  const ModelConfig model = cfg.session.model();

  bool any_secure = false;
  for (Method m : cfg.methods) any_secure |= is_secure(m);
  protocol::SessionOptions opts = cfg.options;
  std::vector<Dataset> parts;
  if (any_secure) {
    cfg.session.validate();
    rep.key_bits = cfg.session.key_bits;
    parts = partition(data, cfg.session.s_nodes, cfg.partition_seed);
    if (!opts.key) {
      const auto t0 = Clock::now();
      opts.key = protocol::session_key(cfg.session);
      rep.keygen_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
  }

  std::optional<Vector> reference;
  try {
    reference = newton_fit(data, model).beta;
  } catch (const Error&) {
  }

  for (Method m : cfg.methods) {
    MethodEntry e;
    e.method = m;
    try {
      if (is_secure(m)) {
        protocol::SessionConfig sc = cfg.session;
        sc.protocol = protocol_for(m);
        const auto res = protocol::run_session(sc, parts, opts);
        const auto& t = res.trace;
        e.iterations = t.iterations;
        e.converged = t.converged;
        e.setup_seconds = t.setup_seconds;
        e.total_seconds = t.total_seconds;
        // Totals across parties: the nodes encrypt their local statistics.
        e.counters = t.counters;
        e.counters.encryptions += t.node_encryptions;
        e.counters.scalar_muls += t.node_scalar_muls;
        for (const auto& [pair, stat] : t.traffic) e.bytes += stat.bytes;
        e.beta = t.beta;
      } else {
        const auto t0 = Clock::now();
        const FitResult f = m == Method::kPlainNewton ? newton_fit(data, model) : privlogit_fit(data, model);
        e.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        e.iterations = f.iterations;
        e.converged = f.converged;
        e.beta = f.beta;
      }
      e.ok = true;
      if (reference) e.r2_vs_newton = r_squared(e.beta, *reference);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    rep.entries.push_back(std::move(e));
  }

  if (const MethodEntry* base = rep.find(Method::kSecureNewton); base && base->ok)
    for (auto& e : rep.entries)
      if (e.ok && e.total_seconds > 0) e.speedup = base->total_seconds / e.total_seconds;
  return rep;
}

}  // namespace privlogit::harness

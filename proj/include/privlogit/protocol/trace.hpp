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

#ifndef PRIVLOGIT_PROTOCOL_TRACE_HPP_
#define PRIVLOGIT_PROTOCOL_TRACE_HPP_

#include <map>
#include <string>
#include <vector>

#include "privlogit/core/dataset.hpp"
#include "privlogit/protocol/transport.hpp"
#include "privlogit/secure/op_counters.hpp"

namespace privlogit::protocol {

struct ProtocolTrace {
  std::string protocol;
  int iterations = 0;
  bool converged = false;
  Vector beta;
  // β⁽⁰⁾ … β⁽iterations⁾ as revealed at server A.
  std::vector<Vector> beta_trace;

  // Handshake plus the one-time setup (SetupOnce, and the inversion for the
  // local-update protocol).
  double setup_seconds = 0.0;
  std::vector<double> iteration_seconds;
  double total_seconds = 0.0;

  // Server A's secure-operation counters: totals, the setup phase, and the
  // delta of every iteration.
  secure::OpCounters counters;
  secure::OpCounters setup_counters;
  std::vector<secure::OpCounters> iteration_counters;

  // Work done at the nodes, summed over all of them.
  uint64_t node_encryptions = 0;
  uint64_t node_scalar_muls = 0;

  std::map<std::pair<PartyId, PartyId>, TrafficStats::Pair> traffic;
};

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_TRACE_HPP_

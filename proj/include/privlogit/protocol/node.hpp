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

#ifndef PRIVLOGIT_PROTOCOL_NODE_HPP_
#define PRIVLOGIT_PROTOCOL_NODE_HPP_

#include <vector>

#include "privlogit/core/dataset.hpp"
#include "privlogit/protocol/session_config.hpp"
#include "privlogit/protocol/transport.hpp"

namespace privlogit::protocol {

struct NodeResult {
  Vector beta;
  bool converged = false;
  int iterations = 0;
  uint64_t encryptions = 0;
  uint64_t scalar_muls = 0;
  // Types of every message this node received, in order.
  std::vector<MsgType> received;
};

// One organization. Holds its rows in plaintext and only ever sends
// ciphertexts of local aggregates to server A.
class Node {
 public:
  Node(SessionConfig cfg, Dataset data, Endpoint& ep, Rng rng);

  // Handshake, then serve server A until ConvergedNotice.
  NodeResult run();

 private:
  NodeResult serve();

  SessionConfig cfg_;
  Dataset data_;
  Endpoint& ep_;
  Rng rng_;
};

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_NODE_HPP_

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

#ifndef PRIVLOGIT_PROTOCOL_SERVER_B_HPP_
#define PRIVLOGIT_PROTOCOL_SERVER_B_HPP_

#include "privlogit/protocol/session_config.hpp"
#include "privlogit/protocol/transport.hpp"
#include "privlogit/secure/key_holder.hpp"

namespace privlogit::protocol {

// The key-holding center server. Announces the public key in its Hello and
// then answers blinded requests from server A until the session ends.
class ServerB {
 public:
  ServerB(SessionConfig cfg, paillier::KeyPair kp, Endpoint& ep, Rng rng);

  void run();

  const secure::KeyHolder& key_holder() const { return holder_; }
  void set_record_transcript(bool on) { holder_.set_record_transcript(on); }
  uint64_t requests_served() const { return served_; }

 private:
  void serve();

  SessionConfig cfg_;
  Endpoint& ep_;
  secure::KeyHolder holder_;
  uint64_t served_ = 0;
};

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_SERVER_B_HPP_

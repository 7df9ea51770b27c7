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

#ifndef PRIVLOGIT_PROTOCOL_PARTY_HPP_
#define PRIVLOGIT_PROTOCOL_PARTY_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "privlogit/random.hpp"

namespace privlogit::protocol {

enum class Role : uint8_t { kNode = 0, kServerA = 1, kServerB = 2 };

// Node indices run 1..S; servers carry index 0.
struct PartyId {
  Role role = Role::kServerA;
  uint16_t index = 0;

  static PartyId node(uint16_t j) { return {Role::kNode, j}; }
  static PartyId server_a() { return {Role::kServerA, 0}; }
  static PartyId server_b() { return {Role::kServerB, 0}; }

  friend auto operator<=>(const PartyId&, const PartyId&) = default;
};

std::string to_string(const PartyId& p);

using SessionId = std::array<uint8_t, 16>;

SessionId random_session_id(Rng& rng);

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_PARTY_HPP_

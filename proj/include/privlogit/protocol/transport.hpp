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

#ifndef PRIVLOGIT_PROTOCOL_TRANSPORT_HPP_
#define PRIVLOGIT_PROTOCOL_TRANSPORT_HPP_

#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "privlogit/errors.hpp"
#include "privlogit/protocol/envelope.hpp"

namespace privlogit::protocol {

using namespace std::chrono_literals;

inline constexpr std::chrono::milliseconds kDefaultTimeout = 30s;

// Bytes and message counts per (from, to) pair, measured on encoded frames.
class TrafficStats {
 public:
  struct Pair {
    uint64_t bytes = 0;
    uint64_t messages = 0;
  };

  void record(const PartyId& from, const PartyId& to, uint64_t bytes);
  std::map<std::pair<PartyId, PartyId>, Pair> snapshot() const;
  uint64_t total_bytes() const;

 private:
  mutable std::mutex mu_;
  std::map<std::pair<PartyId, PartyId>, Pair> pairs_;
};

// Incoming queue of one party with per-sender FIFO order. An Abort from any
// sender, or a transport failure, wakes every waiting receive.
class Mailbox {
 public:
  void push(Envelope e);
  // Records a transport failure that poisons every receive (malformed frame).
  void fail(const std::string& reason);
  // Failure of one link (lost connection). Messages already queued from that
  // peer are still delivered.
  void fail(const PartyId& from, const std::string& reason);

  // Next envelope from `from`. Throws ProtocolAbort on timeout or a recorded
  // failure, and PeerAborted as soon as any peer has sent Abort.
  Envelope pop(const PartyId& from, std::chrono::milliseconds timeout);

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::map<PartyId, std::deque<Envelope>> queues_;
  std::optional<Envelope> abort_;
  std::optional<std::string> failure_;
  std::map<PartyId, std::string> link_failures_;
};

// One party's view of the network.
class Endpoint {
 public:
  virtual ~Endpoint() = default;

  virtual PartyId self() const = 0;
  virtual const SessionId& session() const = 0;
  virtual void send(const PartyId& to, MsgType type, wire::Bytes payload) = 0;
  virtual Envelope recv(const PartyId& from) = 0;

  // Best-effort Abort to `to`; never throws.
  void abort(const PartyId& to, const AbortInfo& info) noexcept;
};

// Thrown by receives that saw a peer's Abort; carries the peer's reason.
class PeerAborted : public ProtocolAbort {
 public:
  PeerAborted(PartyId from, AbortInfo info);
  const PartyId& from() const { return from_; }
  const AbortInfo& info() const { return info_; }

 private:
  PartyId from_;
  AbortInfo info_;
};

// Every party in one process. Frames are encoded and decoded on the way
// through so the byte counts match the socket transport.
class InProcNetwork {
 public:
  InProcNetwork(SessionId session, std::chrono::milliseconds timeout = kDefaultTimeout);

  std::unique_ptr<Endpoint> endpoint(const PartyId& self);
  const TrafficStats& stats() const { return *stats_; }
  std::shared_ptr<TrafficStats> shared_stats() const { return stats_; }

  // Raw delivery of an encoded frame, as a socket reader would see it.
  // Malformed frames fail the recipient's mailbox.
  void deliver(const PartyId& to, std::span<const uint8_t> frame);

 private:
  class InProcEndpoint;
  Mailbox& mailbox(const PartyId& p);

  SessionId session_;
  std::chrono::milliseconds timeout_;
  std::shared_ptr<TrafficStats> stats_ = std::make_shared<TrafficStats>();
  std::mutex mu_;
  std::map<PartyId, std::unique_ptr<Mailbox>> boxes_;
};

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_TRANSPORT_HPP_

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

#ifndef PRIVLOGIT_PROTOCOL_TCP_TRANSPORT_HPP_
#define PRIVLOGIT_PROTOCOL_TCP_TRANSPORT_HPP_

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "privlogit/protocol/transport.hpp"

namespace privlogit::protocol {

// "host:port"; throws ConfigError.
std::pair<std::string, uint16_t> parse_address(const std::string& addr);

// One TCP connection carrying Envelope frames, with a reader thread that
// feeds a Mailbox.
class FrameSocket {
 public:
  FrameSocket(int fd, SessionId session);
  ~FrameSocket();
  FrameSocket(const FrameSocket&) = delete;
  FrameSocket& operator=(const FrameSocket&) = delete;

  void write(std::span<const uint8_t> frame);
  // Blocking read of one frame; throws ParseError or ProtocolAbort (EOF).
  Envelope read();
  // Starts the reader thread: every later frame goes to `box`; failures are
  // reported against `peer`.
  void pump_into(Mailbox& box, const PartyId& peer);
  void shutdown() noexcept;

 private:
  void read_exact(uint8_t* dst, size_t n);

  int fd_;
  SessionId session_;
  std::mutex write_mu_;
  std::thread reader_;
  std::atomic<bool> closing_{false};
};

// Star topology: server A listens and every other party connects to it.
// Only server A ever talks to nodes and to server B, so no relaying is
// needed.
class TcpHub final : public Endpoint {
 public:
  // Binds immediately; port 0 picks an ephemeral port.
  TcpHub(const std::string& addr, SessionId session,
         std::chrono::milliseconds timeout = kDefaultTimeout,
         std::shared_ptr<TrafficStats> stats = std::make_shared<TrafficStats>());
  ~TcpHub() override;

  uint16_t port() const { return port_; }
  // Accepts until every expected party has connected and sent its first
  // frame. Throws ProtocolAbort on timeout or an unexpected peer.
  void accept_peers(const std::vector<PartyId>& expected);

  PartyId self() const override { return PartyId::server_a(); }
  const SessionId& session() const override { return session_; }
  void send(const PartyId& to, MsgType type, wire::Bytes payload) override;
  Envelope recv(const PartyId& from) override;

 private:
  int listen_fd_ = -1;
  uint16_t port_ = 0;
  SessionId session_;
  std::chrono::milliseconds timeout_;
  std::shared_ptr<TrafficStats> stats_;
  Mailbox box_;
  std::map<PartyId, std::unique_ptr<FrameSocket>> peers_;
};

class TcpClient final : public Endpoint {
 public:
  // Retries the connection until `timeout` elapses.
  TcpClient(const std::string& addr, PartyId self, SessionId session,
            std::chrono::milliseconds timeout = kDefaultTimeout,
            std::shared_ptr<TrafficStats> stats = std::make_shared<TrafficStats>());
  ~TcpClient() override;

  PartyId self() const override { return self_; }
  const SessionId& session() const override { return session_; }
  void send(const PartyId& to, MsgType type, wire::Bytes payload) override;
  Envelope recv(const PartyId& from) override;

 private:
  PartyId self_;
  SessionId session_;
  std::chrono::milliseconds timeout_;
  std::shared_ptr<TrafficStats> stats_;
  Mailbox box_;
  std::unique_ptr<FrameSocket> sock_;
};

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_TCP_TRANSPORT_HPP_

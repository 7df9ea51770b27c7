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

#include "privlogit/protocol/tcp_transport.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "privlogit/errors.hpp"

namespace privlogit::protocol {

namespace {

using Clock = std::chrono::steady_clock;

std::string sys_error(const char* what) { return std::string(what) + ": " + std::strerror(errno); }

addrinfo* resolve(const std::string& host, uint16_t port, bool passive) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  if (passive) hints.ai_flags = AI_PASSIVE;
  addrinfo* res = nullptr;
  const std::string service = std::to_string(port);
  const int rc = getaddrinfo(host.empty() ? nullptr : host.c_str(), service.c_str(), &hints, &res);
  if (rc != 0) throw ConfigError("cannot resolve '" + host + "': " + gai_strerror(rc));
  return res;
}

void set_nodelay(int fd) {
  int one = 1;
  setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
}

}  // namespace

std::pair<std::string, uint16_t> parse_address(const std::string& addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) throw ConfigError("address '" + addr + "' is not host:port");
  std::string host = addr.substr(0, colon);
  if (host.size() >= 2 && host.front() == '[' && host.back() == ']')
    host = host.substr(1, host.size() - 2);
  const std::string port = addr.substr(colon + 1);
  char* end = nullptr;
  const long v = std::strtol(port.c_str(), &end, 10);
  if (port.empty() || *end != '\0' || v < 0 || v > 65535)
    throw ConfigError("bad port in address '" + addr + "'");
  return {host, static_cast<uint16_t>(v)};
}

FrameSocket::FrameSocket(int fd, SessionId session) : fd_(fd), session_(session) {}

FrameSocket::~FrameSocket() {
  shutdown();
  if (reader_.joinable()) reader_.join();
  ::close(fd_);
}

void FrameSocket::shutdown() noexcept {
  closing_ = true;
  ::shutdown(fd_, SHUT_RDWR);
}

void FrameSocket::write(std::span<const uint8_t> frame) {
  std::lock_guard lock(write_mu_);
  size_t off = 0;
  while (off < frame.size()) {
    const ssize_t n = ::send(fd_, frame.data() + off, frame.size() - off, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolAbort(sys_error("send"));
    }
    off += static_cast<size_t>(n);
  }
}

void FrameSocket::read_exact(uint8_t* dst, size_t n) {
  size_t off = 0;
  while (off < n) {
    const ssize_t got = ::recv(fd_, dst + off, n - off, 0);
    if (got == 0) {
      if (off == 0 && dst != nullptr) throw ProtocolAbort("connection closed");
      throw ParseError("truncated frame: connection closed mid-frame");
    }
    if (got < 0) {
      if (errno == EINTR) continue;
      throw ProtocolAbort(sys_error("recv"));
    }
    off += static_cast<size_t>(got);
  }
}

Envelope FrameSocket::read() {
  uint8_t header[Envelope::kHeaderSize];
  read_exact(header, sizeof header);
  Envelope e;
  const uint32_t len = decode_header(header, e);
  e.payload.resize(len);
  if (len > 0) {
    try {
      read_exact(e.payload.data(), len);
    } catch (const ProtocolAbort&) {
      throw ParseError("truncated frame: connection closed mid-payload");
    }
  }
  if (e.session != session_) throw ParseError("frame for a different session (config mismatch?)");
  return e;
}

void FrameSocket::pump_into(Mailbox& box, const PartyId& peer) {
  reader_ = std::thread([this, &box, peer] {
    for (;;) {
      try {
        Envelope e = read();
        if (e.from != peer) throw ParseError("frame claims to come from " + to_string(e.from));
        box.push(std::move(e));
      } catch (const ParseError& err) {
        if (!closing_) box.fail(std::string("malformed frame from ") + to_string(peer) + ": " + err.what());
        return;
      } catch (const std::exception& err) {
        if (!closing_) box.fail(peer, err.what());
        return;
      }
    }
  });
}

TcpHub::TcpHub(const std::string& addr, SessionId session, std::chrono::milliseconds timeout,
               std::shared_ptr<TrafficStats> stats)
    : session_(session), timeout_(timeout), stats_(std::move(stats)) {
  const auto [host, port] = parse_address(addr);
  addrinfo* res = resolve(host, port, true);
  std::string last = "no usable address";
  for (addrinfo* ai = res; ai; ai = ai->ai_next) {
    const int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    int one = 1;
    setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, SOMAXCONN) == 0) {
      listen_fd_ = fd;
      break;
    }
    last = sys_error("bind");
    ::close(fd);
  }
  freeaddrinfo(res);
  if (listen_fd_ < 0) throw ConfigError("cannot listen on " + addr + ": " + last);
  sockaddr_storage ss{};
  socklen_t len = sizeof ss;
  getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&ss), &len);
  port_ = ntohs(ss.ss_family == AF_INET6 ? reinterpret_cast<sockaddr_in6*>(&ss)->sin6_port
                                         : reinterpret_cast<sockaddr_in*>(&ss)->sin_port);
}

TcpHub::~TcpHub() {
  for (auto& [id, s] : peers_) s->shutdown();
  peers_.clear();
  if (listen_fd_ >= 0) ::close(listen_fd_);
}

void TcpHub::accept_peers(const std::vector<PartyId>& expected) {
  const auto deadline = Clock::now() + timeout_;
  size_t pending = expected.size();
  while (pending > 0) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) throw ProtocolAbort("timed out waiting for peers to connect");
    pollfd pfd{listen_fd_, POLLIN, 0};
    const int rc = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (rc < 0 && errno != EINTR) throw ProtocolAbort(sys_error("poll"));
    if (rc <= 0) continue;
    const int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) continue;
    set_nodelay(fd);
    auto sock = std::make_unique<FrameSocket>(fd, session_);
    Envelope first;
    try {
      first = sock->read();
    } catch (const std::exception& e) {
      throw ProtocolAbort(std::string("bad first frame from a connecting peer: ") + e.what());
    }
    bool wanted = false;
    for (const auto& p : expected) wanted |= p == first.from;
    if (!wanted || peers_.count(first.from))
      throw ProtocolAbort("unexpected peer " + to_string(first.from));
    const PartyId from = first.from;
    box_.push(std::move(first));
    sock->pump_into(box_, from);
    peers_.emplace(from, std::move(sock));
    --pending;
  }
}

void TcpHub::send(const PartyId& to, MsgType type, wire::Bytes payload) {
  auto it = peers_.find(to);
  if (it == peers_.end()) throw ProtocolAbort("no connection to " + to_string(to));
  Envelope e;
  e.session = session_;
  e.from = self();
  e.to = to;
  e.type = type;
  e.payload = std::move(payload);
  const wire::Bytes frame = encode_envelope(e);
  stats_->record(e.from, to, frame.size());
  it->second->write(frame);
}

Envelope TcpHub::recv(const PartyId& from) { return box_.pop(from, timeout_); }

TcpClient::TcpClient(const std::string& addr, PartyId self, SessionId session,
                     std::chrono::milliseconds timeout, std::shared_ptr<TrafficStats> stats)
    : self_(self), session_(session), timeout_(timeout), stats_(std::move(stats)) {
  const auto [host, port] = parse_address(addr);
  const auto deadline = Clock::now() + timeout_;
  int fd = -1;
  std::string last;
  while (fd < 0) {
    addrinfo* res = resolve(host, port, false);
    for (addrinfo* ai = res; ai && fd < 0; ai = ai->ai_next) {
      const int s = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
      if (s < 0) continue;
      if (::connect(s, ai->ai_addr, ai->ai_addrlen) == 0) {
        fd = s;
      } else {
        last = sys_error("connect");
        ::close(s);
      }
    }
    freeaddrinfo(res);
    if (fd >= 0) break;
    if (Clock::now() >= deadline) throw ProtocolAbort("cannot connect to " + addr + ": " + last);
    std::this_thread::sleep_for(50ms);
  }
  set_nodelay(fd);
  sock_ = std::make_unique<FrameSocket>(fd, session_);
  sock_->pump_into(box_, PartyId::server_a());
}

TcpClient::~TcpClient() {
  if (sock_) sock_->shutdown();
}

void TcpClient::send(const PartyId& to, MsgType type, wire::Bytes payload) {
  if (to != PartyId::server_a()) throw ProtocolAbort("clients can only reach server A");
  Envelope e;
  e.session = session_;
  e.from = self_;
  e.to = to;
  e.type = type;
  e.payload = std::move(payload);
  const wire::Bytes frame = encode_envelope(e);
  stats_->record(self_, to, frame.size());
  sock_->write(frame);
}

Envelope TcpClient::recv(const PartyId& from) { return box_.pop(from, timeout_); }

}  // namespace privlogit::protocol

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

#include "privlogit/protocol/transport.hpp"

#include "privlogit/errors.hpp"

namespace privlogit::protocol {

void TrafficStats::record(const PartyId& from, const PartyId& to, uint64_t bytes) {
  std::lock_guard lock(mu_);
  auto& p = pairs_[{from, to}];
  p.bytes += bytes;
  ++p.messages;
}

std::map<std::pair<PartyId, PartyId>, TrafficStats::Pair> TrafficStats::snapshot() const {
  std::lock_guard lock(mu_);
  return pairs_;
}

uint64_t TrafficStats::total_bytes() const {
  std::lock_guard lock(mu_);
  uint64_t t = 0;
  for (const auto& [k, v] : pairs_) t += v.bytes;
  return t;
}

void Mailbox::push(Envelope e) {
  {
    std::lock_guard lock(mu_);
    if (e.type == MsgType::kAbort) {
      if (!abort_) abort_ = std::move(e);
    } else {
      queues_[e.from].push_back(std::move(e));
    }
  }
  cv_.notify_all();
}

void Mailbox::fail(const std::string& reason) {
  {
    std::lock_guard lock(mu_);
    if (!failure_) failure_ = reason;
  }
  cv_.notify_all();
}

void Mailbox::fail(const PartyId& from, const std::string& reason) {
  {
    std::lock_guard lock(mu_);
    link_failures_.try_emplace(from, reason);
  }
  cv_.notify_all();
}

Envelope Mailbox::pop(const PartyId& from, std::chrono::milliseconds timeout) {
  std::unique_lock lock(mu_);
  auto& q = queues_[from];
  const bool ready = cv_.wait_for(lock, timeout, [&] {
    return abort_ || failure_ || !q.empty() || link_failures_.count(from);
  });
  if (abort_) throw PeerAborted(abort_->from, decode_abort(abort_->payload));
  if (failure_) throw ProtocolAbort("transport failure: " + *failure_);
  if (q.empty() && link_failures_.count(from))
    throw ProtocolAbort("link to " + to_string(from) + " failed: " + link_failures_[from]);
  if (!ready)
    throw ProtocolAbort("timed out after " + std::to_string(timeout.count()) +
                        " ms waiting for " + to_string(from));
  Envelope e = std::move(q.front());
  q.pop_front();
  return e;
}

void Endpoint::abort(const PartyId& to, const AbortInfo& info) noexcept {
  try {
    send(to, MsgType::kAbort, encode_abort(info));
  } catch (...) {
  }
}

PeerAborted::PeerAborted(PartyId from, AbortInfo info)
    : ProtocolAbort("aborted by " + to_string(from) + ": " + info.reason),
      from_(from),
      info_(std::move(info)) {}

class InProcNetwork::InProcEndpoint final : public Endpoint {
 public:
  InProcEndpoint(InProcNetwork& net, PartyId self, Mailbox& box)
      : net_(net), self_(self), box_(box) {}

  PartyId self() const override { return self_; }
  const SessionId& session() const override { return net_.session_; }

  void send(const PartyId& to, MsgType type, wire::Bytes payload) override {
    Envelope e;
    e.session = net_.session_;
    e.from = self_;
    e.to = to;
    e.type = type;
    e.payload = std::move(payload);
    const wire::Bytes frame = encode_envelope(e);
    net_.stats_->record(self_, to, frame.size());
    net_.deliver(to, frame);
  }

  Envelope recv(const PartyId& from) override { return box_.pop(from, net_.timeout_); }

 private:
  InProcNetwork& net_;
  PartyId self_;
  Mailbox& box_;
};

InProcNetwork::InProcNetwork(SessionId session, std::chrono::milliseconds timeout)
    : session_(session), timeout_(timeout) {}

Mailbox& InProcNetwork::mailbox(const PartyId& p) {
  std::lock_guard lock(mu_);
  auto& slot = boxes_[p];
  if (!slot) slot = std::make_unique<Mailbox>();
  return *slot;
}

std::unique_ptr<Endpoint> InProcNetwork::endpoint(const PartyId& self) {
  return std::make_unique<InProcEndpoint>(*this, self, mailbox(self));
}

void InProcNetwork::deliver(const PartyId& to, std::span<const uint8_t> frame) {
  Mailbox& box = mailbox(to);
  try {
    Envelope e = decode_envelope(frame);
    if (e.session != session_) throw ParseError("frame for a different session");
    if (e.to != to) throw ParseError("frame addressed to " + to_string(e.to));
    box.push(std::move(e));
  } catch (const ParseError& err) {
    box.fail(std::string("malformed frame: ") + err.what());
  }
}

}  // namespace privlogit::protocol

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

#ifndef PRIVLOGIT_PROTOCOL_SERVER_A_HPP_
#define PRIVLOGIT_PROTOCOL_SERVER_A_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "privlogit/protocol/session_config.hpp"
#include "privlogit/protocol/trace.hpp"
#include "privlogit/protocol/transport.hpp"
#include "privlogit/secure/encrypted_backend.hpp"

namespace privlogit::protocol {

// Forwards blinded requests to server B over the session transport.
class TransportLink final : public secure::KeyHolderLink {
 public:
  explicit TransportLink(Endpoint& ep) : ep_(ep) {}
  wire::Bytes exchange(const wire::Bytes& request) override;

 private:
  Endpoint& ep_;
};

// The aggregating center server: holds every ciphertext, drives the
// optimizer and talks to server B for the interactive operations.
class ServerA {
 public:
  ServerA(SessionConfig cfg, Endpoint& ep, Rng rng);

  // Collects Hello from server B and every node, checks the configuration
  // hashes and feature counts, and acknowledges. Aborts everyone on a
  // mismatch.
  void handshake();

  // Aggregates the nodes' encrypted approximate Hessians and factors
  // (−H̃) = L Lᵀ with server B. Callable once per session.
  const secure::CipherMatrix& setup_once();

  // The whole session for cfg.protocol: handshake, setup where the protocol
  // has one, iterations, ConvergedNotice.
  ProtocolTrace run();

  // Ends the session for every party.
  void finish(const Vector& beta, bool converged, int iterations);

  secure::EncryptedBackend& backend();
  const paillier::PublicKey& public_key() const;
  Eigen::Index features() const { return p_; }
  Endpoint& endpoint() { return ep_; }
  // Every node, then server B.
  std::vector<PartyId> peers() const;

 private:
  struct Round {
    secure::Ciphertext loglik;
    std::vector<secure::Ciphertext> vec;  // gradient, or the local step
    secure::CipherMatrix neg_hessian;     // Newton only
  };

  void broadcast_beta(const Vector& beta);
  Round collect(const Vector& beta);
  std::vector<secure::Ciphertext> receive_block(const PartyId& from, MsgType type, size_t rows);
  secure::CipherMatrix aggregate_symmetric(const std::vector<std::vector<secure::Ciphertext>>& packed,
                                           double diagonal_shift);
  Vector step(const Round& r, const Vector& beta);

  SessionConfig cfg_;
  Endpoint& ep_;
  Rng rng_;
  std::vector<PartyId> nodes_;
  Eigen::Index p_ = 0;
  std::optional<paillier::PublicKey> pk_;
  std::unique_ptr<TransportLink> link_;
  std::unique_ptr<secure::EncryptedBackend> backend_;
  std::optional<secure::CipherMatrix> factor_;
  std::optional<secure::CipherMatrix> inverse_;
  bool setup_done_ = false;
};

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_SERVER_A_HPP_

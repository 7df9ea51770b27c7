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

#include "privlogit/protocol/server_a.hpp"

#include <chrono>
#include <cmath>

#include "privlogit/errors.hpp"
#include "privlogit/protocol/convergence.hpp"
#include "privlogit/protocol/messages.hpp"

namespace privlogit::protocol {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

}  // namespace

wire::Bytes TransportLink::exchange(const wire::Bytes& request) {
  ep_.send(PartyId::server_b(), MsgType::kBlindedRequest, request);
  return expect(ep_, PartyId::server_b(), MsgType::kBlindedResponse).payload;
}

ServerA::ServerA(SessionConfig cfg, Endpoint& ep, Rng rng)
    : cfg_(std::move(cfg)), ep_(ep), rng_(std::move(rng)) {
  cfg_.validate();
  if (ep_.self() != PartyId::server_a()) throw ConfigError("server A endpoint has the wrong identity");
  for (int j = 1; j <= cfg_.s_nodes; ++j) nodes_.push_back(PartyId::node(static_cast<uint16_t>(j)));
}

secure::EncryptedBackend& ServerA::backend() {
  if (!backend_) throw ProtocolAbort("handshake has not completed");
  return *backend_;
}

const paillier::PublicKey& ServerA::public_key() const {
  if (!pk_) throw ProtocolAbort("handshake has not completed");
  return *pk_;
}

std::vector<PartyId> ServerA::peers() const {
  std::vector<PartyId> all = nodes_;
  all.push_back(PartyId::server_b());
  return all;
}

void ServerA::handshake() {
  const auto want = cfg_.hash();
  const std::vector<PartyId> all = peers();
  run_guarded(ep_, all, [&] {
    const Hello b = decode_hello(expect(ep_, PartyId::server_b(), MsgType::kHello).payload);
    if (b.config_hash != want) throw ProtocolAbort("server B runs a different session configuration");
    if (!b.public_key) throw ProtocolAbort("server B did not announce a public key");
    if (static_cast<int>(b.public_key->bits()) != cfg_.key_bits)
      throw ProtocolAbort("server B's key size differs from the configuration");
    for (const auto& node : nodes_) {
      const Hello h = decode_hello(expect(ep_, node, MsgType::kHello).payload);
      if (h.config_hash != want)
        throw ProtocolAbort(to_string(node) + " runs a different session configuration");
      if (h.features == 0) throw ProtocolAbort(to_string(node) + " announced no features");
      if (p_ == 0) p_ = h.features;
      if (h.features != p_) throw ProtocolAbort(to_string(node) + " has a different feature count");
    }
    pk_ = *b.public_key;
    const wire::Bytes ack = encode_config_ack({*pk_, static_cast<uint16_t>(p_)});
    for (const auto& party : all) ep_.send(party, MsgType::kConfigAck, ack);
    link_ = std::make_unique<TransportLink>(ep_);
    backend_ = std::make_unique<secure::EncryptedBackend>(*pk_, cfg_.fixed_point(pk_->n), *link_,
                                                          rng_.fork(1));
  });
}

std::vector<secure::Ciphertext> ServerA::receive_block(const PartyId& from, MsgType type,
                                                       size_t rows) {
  auto cs = decode_cipher_block(expect(ep_, from, type).payload, static_cast<uint16_t>(rows), 1);
  for (const auto& c : cs) backend().ops().check(c);
  return cs;
}

secure::CipherMatrix ServerA::aggregate_symmetric(
    const std::vector<std::vector<secure::Ciphertext>>& packed, double diagonal_shift) {
  auto& be = backend();
  const auto p = static_cast<size_t>(p_);
  secure::CipherMatrix out(p, p, be.constant(0.0));
  size_t k = 0;
  for (size_t i = 0; i < p; ++i) {
    for (size_t j = i; j < p; ++j, ++k) {
      secure::Ciphertext sum = packed.front()[k];
      for (size_t s = 1; s < packed.size(); ++s) sum = be.add(sum, packed[s][k]);
      // The nodes send entries of a negative (semi)definite matrix.
      sum = be.negate(sum);
      if (i == j && diagonal_shift != 0.0) sum = be.add(sum, be.constant(diagonal_shift));
      out(i, j) = sum;
      out(j, i) = sum;
    }
  }
  return out;
}

const secure::CipherMatrix& ServerA::setup_once() {
  if (setup_done_) throw ProtocolAbort("SetupOnce already ran in this session");
  if (cfg_.protocol == ProtocolKind::kSecureNewton)
    throw ProtocolAbort("the Newton baseline has no setup phase");
  setup_done_ = true;
  std::vector<std::vector<secure::Ciphertext>> packed;
  for (const auto& node : nodes_)
    packed.push_back(receive_block(node, MsgType::kLocalHessian, packed_size(p_)));
  // −(Σ H̃ⱼ − λI) = ¼XᵀX + λI
  const secure::CipherMatrix neg = aggregate_symmetric(packed, cfg_.lambda);
  try {
    factor_ = backend().cholesky(neg);
  } catch (const NotPositiveDefinite& e) {
    throw NotPositiveDefinite(std::string("approximate Hessian is not positive definite (") +
                              e.what() + "); increase lambda or check the rank of X");
  }
  return *factor_;
}

void ServerA::broadcast_beta(const Vector& beta) {
  const wire::Bytes payload = encode_beta(beta);
  for (const auto& node : nodes_) ep_.send(node, MsgType::kBetaBroadcast, payload);
}

ServerA::Round ServerA::collect(const Vector& beta) {
  auto& be = backend();
  const auto p = static_cast<size_t>(p_);
  const bool newton = cfg_.protocol == ProtocolKind::kSecureNewton;
  const bool local = cfg_.protocol == ProtocolKind::kPrivLogitLocal;
  std::vector<std::vector<secure::Ciphertext>> hess;
  Round r;
  for (size_t s = 0; s < nodes_.size(); ++s) {
    const PartyId& node = nodes_[s];
    if (newton) hess.push_back(receive_block(node, MsgType::kLocalHessian, packed_size(p_)));
    auto v = receive_block(node, local ? MsgType::kLocalNewtonStep : MsgType::kLocalGradient, p);
    auto l = receive_block(node, MsgType::kLocalLogLik, 1);
    if (s == 0) {
      r.vec = std::move(v);
      r.loglik = l.front();
    } else {
      for (size_t i = 0; i < p; ++i) r.vec[i] = be.add(r.vec[i], v[i]);
      r.loglik = be.add(r.loglik, l.front());
    }
  }
  r.loglik = be.add(r.loglik, be.constant(-0.5 * cfg_.lambda * beta.squaredNorm()));
  if (!local && cfg_.lambda != 0.0)
    for (size_t i = 0; i < p; ++i)
      r.vec[i] = be.sub(r.vec[i], be.constant(cfg_.lambda * beta(static_cast<Eigen::Index>(i))));
  if (newton) r.neg_hessian = aggregate_symmetric(hess, cfg_.lambda);
  return r;
}

Vector ServerA::step(const Round& r, const Vector& beta) {
  auto& be = backend();
  const auto& fp = be.params();
  const auto p = static_cast<size_t>(p_);
  Vector out(p_);
  switch (cfg_.protocol) {
    case ProtocolKind::kPrivLogitHessian: {
      const auto x = be.reveal(be.back_substitute(*factor_, r.vec));
      for (size_t i = 0; i < p; ++i) out(static_cast<Eigen::Index>(i)) = decode(x[i], fp);
      break;
    }
    case ProtocolKind::kPrivLogitLocal: {
      // Σⱼ M gⱼ − M (λβ), everything at scale 2^2f.
      std::vector<secure::Ciphertext> s = r.vec;
      if (cfg_.lambda != 0.0) {
        std::vector<EncodedValue> lb(p);
        for (size_t k = 0; k < p; ++k) lb[k] = encode(cfg_.lambda * beta(static_cast<Eigen::Index>(k)), fp);
        for (size_t i = 0; i < p; ++i)
          for (size_t k = 0; k < p; ++k) s[i] = be.sub(s[i], be.scalar_mul((*inverse_)(i, k), lb[k]));
      }
      const auto x = be.reveal(s);
      for (size_t i = 0; i < p; ++i)
        out(static_cast<Eigen::Index>(i)) = decode_scaled(x[i], fp, 2 * fp.frac_bits);
      break;
    }
    case ProtocolKind::kSecureNewton: {
      secure::CipherMatrix l;
      try {
        l = be.cholesky(r.neg_hessian);
      } catch (const NotPositiveDefinite& e) {
        throw Diverged(std::string("Newton step failed: ") + e.what());
      } catch (const DomainError& e) {
        throw Diverged(std::string("Newton step failed: ") + e.what());
      }
      const auto x = be.reveal(be.back_substitute(l, r.vec));
      for (size_t i = 0; i < p; ++i) out(static_cast<Eigen::Index>(i)) = decode(x[i], fp);
      break;
    }
  }
  return out;
}

void ServerA::finish(const Vector& beta, bool converged, int iterations) {
  const wire::Bytes payload =
      encode_converged({converged, static_cast<uint32_t>(iterations), beta});
  for (const auto& node : nodes_) ep_.send(node, MsgType::kConvergedNotice, payload);
  ep_.send(PartyId::server_b(), MsgType::kConvergedNotice, payload);
}

ProtocolTrace ServerA::run() {
  const auto start = Clock::now();
  handshake();
  return run_guarded(ep_, peers(), [&] {
    ProtocolTrace trace;
    trace.protocol = protocol_name(cfg_.protocol);
    auto& be = backend();

    if (cfg_.protocol != ProtocolKind::kSecureNewton) setup_once();
    if (cfg_.protocol == ProtocolKind::kPrivLogitLocal) {
      inverse_ = be.invert(*factor_);
      const wire::Bytes payload = encode_cipher_block(
          static_cast<uint16_t>(p_), static_cast<uint16_t>(p_), inverse_->data());
      for (const auto& node : nodes_) ep_.send(node, MsgType::kInvHessianBroadcast, payload);
    }
    trace.setup_seconds = seconds_since(start);
    trace.setup_counters = be.counters();

    const bool newton = cfg_.protocol == ProtocolKind::kSecureNewton;
    Vector beta = cfg_.model().initial_beta(p_);
    trace.beta_trace.push_back(beta);
    auto iter_start = Clock::now();
    secure::OpCounters iter_counters = be.counters();
    broadcast_beta(beta);
    Round cur = collect(beta);
    for (int it = 1; it <= cfg_.max_iter; ++it) {
      beta += step(cur, beta);
      if (!beta.allFinite()) throw Diverged("coefficients became non-finite");
      broadcast_beta(beta);
      Round next = collect(beta);
      const bool conv = newton
                            ? secure_abs_convergence_check(be, next.loglik, cur.loglik, cfg_.tol)
                            : secure_convergence_check(be, next.loglik, cur.loglik, cfg_.tol);
      trace.beta_trace.push_back(beta);
      trace.iterations = it;
      trace.iteration_seconds.push_back(seconds_since(iter_start));
      trace.iteration_counters.push_back(be.counters() - iter_counters);
      iter_start = Clock::now();
      iter_counters = be.counters();
      cur = std::move(next);
      if (conv) {
        trace.converged = true;
        break;
      }
    }
    trace.beta = beta;
    trace.counters = be.counters();
    finish(beta, trace.converged, trace.iterations);
    trace.total_seconds = seconds_since(start);
    return trace;
  });
}

}  // namespace privlogit::protocol

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

#include "privlogit/protocol/node.hpp"

#include <optional>

#include "privlogit/core/logistic.hpp"
#include "privlogit/errors.hpp"
#include "privlogit/protocol/messages.hpp"
#include "privlogit/secure/homomorphic_ops.hpp"

namespace privlogit::protocol {

namespace {

std::vector<EncodedValue> encode_all(const Vector& v, const FixedPointParams& fp) {
  std::vector<EncodedValue> out;
  out.reserve(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i), fp));
  return out;
}

Vector pack_upper(const Matrix& m) {
  Vector out(static_cast<Eigen::Index>(packed_size(m.rows())));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j) out(k++) = m(i, j);
  return out;
}

}  // namespace

Node::Node(SessionConfig cfg, Dataset data, Endpoint& ep, Rng rng)
    : cfg_(std::move(cfg)), data_(std::move(data)), ep_(ep), rng_(std::move(rng)) {
  cfg_.validate();
  if (ep_.self().role != Role::kNode) throw ConfigError("node endpoint has a server identity");
  if (data_.cols() > 0xFFFF) throw ConfigError("too many features for the wire format");
}

NodeResult Node::run() {
  return run_guarded(ep_, {PartyId::server_a()}, [&] { return serve(); });
}

NodeResult Node::serve() {
  const PartyId a = PartyId::server_a();
  const Eigen::Index p = data_.cols();
  const auto p16 = static_cast<uint16_t>(p);
  NodeResult res;

  ep_.send(a, MsgType::kHello, encode_hello({cfg_.hash(), p16, std::nullopt}));
  const Envelope ack_env = expect(ep_, a, MsgType::kConfigAck);
  res.received.push_back(ack_env.type);
  const ConfigAck ack = decode_config_ack(ack_env.payload);
  if (ack.features != p16) throw ProtocolAbort("feature count disagrees with server A");
  const FixedPointParams fp = cfg_.fixed_point(ack.public_key.n);
  const secure::PaillierOps ops(ack.public_key);

  auto encrypt = [&](const Vector& v) {
    res.encryptions += static_cast<uint64_t>(v.size());
    const auto enc = encode_all(v, fp);
    return paillier::parallel::encrypt_batch(ack.public_key, enc, rng_);
  };
  auto send_block = [&](MsgType t, const std::vector<paillier::Ciphertext>& cs, uint16_t rows) {
    ep_.send(a, t, encode_cipher_block(rows, 1, cs));
  };

  if (cfg_.protocol != ProtocolKind::kSecureNewton) {
    const Vector h = pack_upper(approx_hessian(data_, 0.0));
    send_block(MsgType::kLocalHessian, encrypt(h), static_cast<uint16_t>(h.size()));
  }

  std::optional<std::vector<paillier::Ciphertext>> inv_hessian;
  for (;;) {
    const Envelope e = ep_.recv(a);
    res.received.push_back(e.type);
    switch (e.type) {
      case MsgType::kInvHessianBroadcast: {
        if (cfg_.protocol != ProtocolKind::kPrivLogitLocal)
          throw ProtocolAbort("inverse Hessian sent outside the local-update protocol");
        inv_hessian = decode_cipher_block(e.payload, p16, p16);
        for (const auto& c : *inv_hessian) ops.check(c);
        break;
      }
      case MsgType::kBetaBroadcast: {
        const Vector beta = decode_beta(e.payload, p);
        const Vector g = gradient(data_, beta, 0.0);
        if (cfg_.protocol == ProtocolKind::kSecureNewton) {
          const Vector h = pack_upper(hessian(data_, beta, 0.0));
          send_block(MsgType::kLocalHessian, encrypt(h), static_cast<uint16_t>(h.size()));
        }
        if (cfg_.protocol == ProtocolKind::kPrivLogitLocal) {
          if (!inv_hessian) throw ProtocolAbort("coefficients arrived before the inverse Hessian");
          // Row i of (−H̃)⁻¹ times g, at scale 2^2f.
          const auto enc_g = encode_all(g, fp);
          std::vector<paillier::Ciphertext> step(static_cast<size_t>(p));
          for (Eigen::Index i = 0; i < p; ++i)
            step[static_cast<size_t>(i)] = ops.dot(
                std::span(*inv_hessian).subspan(static_cast<size_t>(i * p), static_cast<size_t>(p)),
                enc_g);
          res.scalar_muls += static_cast<uint64_t>(p * p);
          send_block(MsgType::kLocalNewtonStep, step, p16);
        } else {
          send_block(MsgType::kLocalGradient, encrypt(g), p16);
        }
        const Vector l = Vector::Constant(1, log_likelihood(data_, beta, 0.0));
        send_block(MsgType::kLocalLogLik, encrypt(l), 1);
        break;
      }
      case MsgType::kConvergedNotice: {
        const ConvergedNotice c = decode_converged(e.payload);
        if (c.beta.size() != p) throw ProtocolAbort("final coefficients have the wrong length");
        res.beta = c.beta;
        res.converged = c.converged;
        res.iterations = static_cast<int>(c.iterations);
        return res;
      }
      default:
        throw ProtocolAbort(std::string("node received unexpected ") + msg_name(e.type));
    }
  }
}

}  // namespace privlogit::protocol

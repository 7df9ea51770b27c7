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

#ifndef PRIVLOGIT_RANDOM_HPP_
#define PRIVLOGIT_RANDOM_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace privlogit {

// Seeded randomness source handed explicitly to every call site that needs
// it. There is no global generator: two parties never share a stream.
//
// Backed by a 64-bit Mersenne Twister; big integers are assembled from its
// words. A seed pins down every draw. Not a CSPRNG: adequate for the
// honest-but-curious desk-scale setting this library targets.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Seeds from std::random_device.
  static Rng from_entropy();

  // Derives an independent stream, e.g. one per party of a session.
  Rng fork(uint64_t stream);

  uint64_t next_u64() { return engine_(); }

  // UniformRandomBitGenerator, for <algorithm> and <random>.
  using result_type = uint64_t;
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }
  double uniform();                     // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // N(0, 1)
  bool bernoulli(double p);

  // Uniform integer in [0, bound).
  mpz_class below(const mpz_class& bound);
  // Uniform integer with exactly `bits` random bits, i.e. in [0, 2^bits).
  mpz_class bits(unsigned bits);
  // Uniform integer in [2^(bits-1), 2^bits): strictly positive, bit length
  // exactly `bits`.
  mpz_class exact_bits(unsigned bits);

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace privlogit

#endif  // PRIVLOGIT_RANDOM_HPP_

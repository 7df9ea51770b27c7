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

#include "privlogit/random.hpp"

#include <vector>

namespace privlogit {

Rng::Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

Rng Rng::from_entropy() {
  std::random_device rd;
  uint64_t seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  return Rng(seed);
}

Rng Rng::fork(uint64_t stream) {
  // splitmix64 finaliser over (seed, stream) keeps forked streams apart.
  uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return Rng(z);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() { return normal_(engine_); }

bool Rng::bernoulli(double p) { return uniform() < p; }

mpz_class Rng::bits(unsigned nbits) {
  mpz_class out;
  if (nbits == 0) return out;
  const size_t words = (nbits + 63) / 64;
  std::vector<uint64_t> buf(words);
  for (auto& w : buf) w = engine_();
  const unsigned extra = static_cast<unsigned>(words * 64 - nbits);
  if (extra != 0) buf.back() >>= extra;
  // least significant word first, native endianness within a word
  mpz_import(out.get_mpz_t(), words, -1, sizeof(uint64_t), 0, 0, buf.data());
  return out;
}

mpz_class Rng::exact_bits(unsigned nbits) {
  mpz_class v = bits(nbits - 1);
  mpz_setbit(v.get_mpz_t(), nbits - 1);
  return v;
}

mpz_class Rng::below(const mpz_class& bound) {
  const unsigned n = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  while (true) {
    mpz_class v = bits(n);
    if (v < bound) return v;
  }
}

}  // namespace privlogit

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

#include "privlogit/crypto/wire.hpp"

#include <bit>
#include <cstring>

#include "privlogit/errors.hpp"

namespace privlogit::wire {

void Writer::u16(uint16_t v) {
  u8(static_cast<uint8_t>(v >> 8));
  u8(static_cast<uint8_t>(v));
}

void Writer::u32(uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) u8(static_cast<uint8_t>(v >> s));
}

void Writer::u64(uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) u8(static_cast<uint8_t>(v >> s));
}

void Writer::f64(double v) { u64(std::bit_cast<uint64_t>(v)); }

void Writer::raw(std::span<const uint8_t> bytes) {
  buf_.insert(buf_.end(), bytes.begin(), bytes.end());
}

void Writer::bigint(const mpz_class& v) {
  if (v < 0) throw ParameterError("unsigned big integer field got a negative value");
  const Bytes mag = magnitude_bytes(v);
  u32(static_cast<uint32_t>(mag.size()));
  raw(mag);
}

void Writer::signed_bigint(const mpz_class& v) {
  mpz_class a = abs(v);
  bigint(a);
  u8(v < 0 ? 1 : 0);
}

void Writer::string(const std::string& s) {
  u32(static_cast<uint32_t>(s.size()));
  raw(std::span(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

std::span<const uint8_t> Reader::raw(size_t n) {
  if (n > remaining()) throw ParseError("truncated message");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

uint8_t Reader::u8() { return raw(1)[0]; }

uint16_t Reader::u16() {
  auto b = raw(2);
  return static_cast<uint16_t>((b[0] << 8) | b[1]);
}

uint32_t Reader::u32() {
  auto b = raw(4);
  uint32_t v = 0;
  for (uint8_t c : b) v = (v << 8) | c;
  return v;
}

uint64_t Reader::u64() {
  auto b = raw(8);
  uint64_t v = 0;
  for (uint8_t c : b) v = (v << 8) | c;
  return v;
}

double Reader::f64() { return std::bit_cast<double>(u64()); }

mpz_class Reader::bigint() {
  const uint32_t n = u32();
  return from_magnitude_bytes(raw(n));
}

mpz_class Reader::signed_bigint() {
  mpz_class v = bigint();
  const uint8_t sign = u8();
  if (sign > 1) throw ParseError("bad sign byte");
  return sign ? mpz_class(-v) : v;
}

std::string Reader::string() {
  const uint32_t n = u32();
  auto b = raw(n);
  return std::string(b.begin(), b.end());
}

void Reader::expect_done() const {
  if (!done()) throw ParseError("trailing bytes in message");
}

Bytes magnitude_bytes(const mpz_class& v) {
  if (v == 0) return {};
  size_t count = 0;
  const size_t size = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  Bytes out(size);
  mpz_export(out.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(count);
  return out;
}

mpz_class from_magnitude_bytes(std::span<const uint8_t> bytes) {
  mpz_class v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

}  // namespace privlogit::wire

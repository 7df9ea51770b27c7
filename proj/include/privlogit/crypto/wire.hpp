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

#ifndef PRIVLOGIT_CRYPTO_WIRE_HPP_
#define PRIVLOGIT_CRYPTO_WIRE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace privlogit::wire {

using Bytes = std::vector<uint8_t>;

// Big-endian byte sink. Big integers are written as a 4-byte big-endian
// length followed by the big-endian magnitude; signed ones append one sign
// byte (0 = non-negative, 1 = negative).
class Writer {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v);
  void u32(uint32_t v);
  void u64(uint64_t v);
  void f64(double v);
  void raw(std::span<const uint8_t> bytes);
  void bigint(const mpz_class& v);  // non-negative only
  void signed_bigint(const mpz_class& v);
  void string(const std::string& s);

  const Bytes& bytes() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }

 private:
  Bytes buf_;
};

// Reads what Writer wrote. Any read past the end throws ParseError.
class Reader {
 public:
  explicit Reader(std::span<const uint8_t> bytes) : data_(bytes) {}

  uint8_t u8();
  uint16_t u16();
  uint32_t u32();
  uint64_t u64();
  double f64();
  std::span<const uint8_t> raw(size_t n);
  mpz_class bigint();
  mpz_class signed_bigint();
  std::string string();

  bool done() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }
  // Throws ParseError unless every byte was consumed.
  void expect_done() const;

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

// Big-endian magnitude bytes without the length prefix (empty for zero).
Bytes magnitude_bytes(const mpz_class& v);
mpz_class from_magnitude_bytes(std::span<const uint8_t> bytes);

}  // namespace privlogit::wire

#endif  // PRIVLOGIT_CRYPTO_WIRE_HPP_

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

#ifndef PRIVLOGIT_CRYPTO_FIXED_POINT_HPP_
#define PRIVLOGIT_CRYPTO_FIXED_POINT_HPP_

#include <gmpxx.h>

namespace privlogit {

// Fixed-point encoding of reals into Z_N.
//
// A real x is stored as round(x · 2^frac_bits) mod N. Residues in [0, N/2)
// are non-negative, [N/2, N) negative. Legal magnitudes stay below
// 2^int_bits, and the modulus must leave room for one product of two legal
// values plus stat_sec_bits of additive blinding before it is truncated back.
struct FixedPointParams {
  int frac_bits = 32;
  int int_bits = 64;
  int stat_sec_bits = 40;
  mpz_class modulus;

  static FixedPointParams for_modulus(const mpz_class& n);

  // Throws ParameterError when the invariants do not hold.
  void validate() const;

  // Bits of the largest legal encoded magnitude: int_bits + frac_bits.
  int value_bits() const { return int_bits + frac_bits; }
};

// A residue in [0, N).
struct EncodedValue {
  mpz_class v;

  friend bool operator==(const EncodedValue&, const EncodedValue&) = default;
};

// Throws RangeError when |x| >= 2^int_bits or x is not finite.
EncodedValue encode(double x, const FixedPointParams& params);

// Throws CorruptionError when the residue lies in the band
// [2^(int+frac), N − 2^(int+frac)].
double decode(const EncodedValue& e, const FixedPointParams& params);

// Decodes a residue carrying `frac_bits` fractional bits (e.g. 2f for an
// untruncated product). The legal band widens accordingly.
double decode_scaled(const EncodedValue& e, const FixedPointParams& params, int frac_bits);

// Signed representative in (−N/2, N/2].
mpz_class signed_value(const mpz_class& residue, const mpz_class& modulus);

// Reduces any integer (possibly negative) into [0, N).
mpz_class wrap(const mpz_class& value, const mpz_class& modulus);

// Brings a raw product of two encodings (scale 2^2f) back to scale 2^f:
// floor division of the signed representative by 2^f, re-wrapped mod N.
// Throws RangeError when the product exceeds 2^(2·(int+frac)).
EncodedValue product_scale_correction(const EncodedValue& raw_product,
                                      const FixedPointParams& params);

}  // namespace privlogit

#endif  // PRIVLOGIT_CRYPTO_FIXED_POINT_HPP_

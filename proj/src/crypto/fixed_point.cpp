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

#include "privlogit/crypto/fixed_point.hpp"

#include <cmath>
#include <string>

#include "privlogit/errors.hpp"

namespace privlogit {

FixedPointParams FixedPointParams::for_modulus(const mpz_class& n) {
  FixedPointParams p;
  p.modulus = n;
  p.validate();
  return p;
}

void FixedPointParams::validate() const {
  if (frac_bits < 1) throw ParameterError("frac_bits must be >= 1");
  if (int_bits < 1) throw ParameterError("int_bits must be >= 1");
  if (stat_sec_bits < 1) throw ParameterError("stat_sec_bits must be >= 1");
  const size_t nbits = mpz_sizeinbase(modulus.get_mpz_t(), 2);
  if (modulus <= 0 ||
      static_cast<size_t>(2 * (int_bits + frac_bits) + stat_sec_bits + 2) >= nbits) {
    throw ParameterError("modulus of " + std::to_string(nbits) +
                         " bits leaves no room for a product plus blinding");
  }
}

mpz_class signed_value(const mpz_class& residue, const mpz_class& modulus) {
  mpz_class half = modulus >> 1;
  if (residue > half) return residue - modulus;
  return residue;
}

mpz_class wrap(const mpz_class& value, const mpz_class& modulus) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

EncodedValue encode(double x, const FixedPointParams& params) {
  if (!std::isfinite(x) || std::abs(x) >= std::ldexp(1.0, params.int_bits)) {
    throw RangeError("value " + std::to_string(x) + " outside the fixed-point range ±2^" +
                     std::to_string(params.int_bits));
  }
  // ldexp is exact, so the only rounding is to the nearest grid point.
  const double scaled = std::nearbyint(std::ldexp(x, params.frac_bits));
  mpz_class v(0);
  mpz_set_d(v.get_mpz_t(), scaled);
  return {wrap(v, params.modulus)};
}

double decode_scaled(const EncodedValue& e, const FixedPointParams& params, int frac_bits) {
  if (e.v < 0 || e.v >= params.modulus) throw CorruptionError("residue outside [0, N)");
  const mpz_class s = signed_value(e.v, params.modulus);
  const size_t limit_bits = static_cast<size_t>(params.int_bits + frac_bits);
  if (s != 0 && mpz_sizeinbase(s.get_mpz_t(), 2) > limit_bits) {
    throw CorruptionError("residue decodes outside the representable band");
  }
  // mpz_get_d truncates; the encoded magnitude fits 2^96 so at most the low
  // bits below double precision are lost.
  return std::ldexp(mpz_get_d(s.get_mpz_t()), -frac_bits);
}

double decode(const EncodedValue& e, const FixedPointParams& params) {
  return decode_scaled(e, params, params.frac_bits);
}

EncodedValue product_scale_correction(const EncodedValue& raw_product,
                                      const FixedPointParams& params) {
  const mpz_class s = signed_value(raw_product.v, params.modulus);
  if (s != 0 &&
      mpz_sizeinbase(s.get_mpz_t(), 2) > static_cast<size_t>(2 * params.value_bits())) {
    throw RangeError("product exceeds the fixed-point range");
  }
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), s.get_mpz_t(), static_cast<mp_bitcnt_t>(params.frac_bits));
  return {wrap(q, params.modulus)};
}

}  // namespace privlogit

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

#include "privlogit/protocol/convergence.hpp"

#include <cmath>

#include "privlogit/errors.hpp"

namespace privlogit::protocol {

namespace {

// Enc(tol·(−l_prev) − Δ) at scale 2^3f, for a given Enc(Δ) at scale 2^f.
secure::Ciphertext slack(secure::SecureBackend& be, const secure::Ciphertext& delta,
                         const secure::Ciphertext& l_prev, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("tol must be finite and > 0");
  const auto& fp = be.params();
  const int shift = 2 * fp.frac_bits;
  mpz_class t;
  mpz_set_d(t.get_mpz_t(), std::nearbyint(std::ldexp(tol, shift)));
  if (t <= 0) throw ConfigError("tol underflows the fixed-point scale");
  const mpz_class unit = mpz_class(1) << shift;
  const secure::Ciphertext budget = be.scalar_mul(be.negate(l_prev), EncodedValue{t});
  const secure::Ciphertext used = be.scalar_mul(delta, EncodedValue{unit});
  return be.sub(budget, used);
}

}  // namespace

bool secure_convergence_check(secure::SecureBackend& be, const secure::Ciphertext& l_curr,
                              const secure::Ciphertext& l_prev, double tol) {
  return be.sign(slack(be, be.sub(l_curr, l_prev), l_prev, tol));
}

bool secure_abs_convergence_check(secure::SecureBackend& be, const secure::Ciphertext& l_curr,
                                  const secure::Ciphertext& l_prev, double tol) {
  secure::Ciphertext delta = be.sub(l_curr, l_prev);
  if (!be.sign(delta)) delta = be.negate(delta);
  return be.sign(slack(be, delta, l_prev, tol));
}

}  // namespace privlogit::protocol

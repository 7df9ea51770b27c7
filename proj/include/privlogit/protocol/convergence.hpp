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

#ifndef PRIVLOGIT_PROTOCOL_CONVERGENCE_HPP_
#define PRIVLOGIT_PROTOCOL_CONVERGENCE_HPP_

#include "privlogit/secure/backend.hpp"

namespace privlogit::protocol {

// [tol·(−l_prev) − (l_curr − l_prev) > 0] under encryption, revealing only
// that bit. Equals |Δl|/|l_prev| < tol when l_prev < 0 and Δl ≥ 0, which
// the constant-Hessian iteration guarantees. tol is applied at scale 2^2f so
// that it keeps its relative precision; the comparison runs at scale 2^3f.
bool secure_convergence_check(secure::SecureBackend& be, const secure::Ciphertext& l_curr,
                              const secure::Ciphertext& l_prev, double tol);

// Same test with |Δl| for Newton, whose likelihood need not increase. The
// sign of Δl is revealed to server A (one extra bit per iteration) and used
// for a public conditional negation.
bool secure_abs_convergence_check(secure::SecureBackend& be, const secure::Ciphertext& l_curr,
                                  const secure::Ciphertext& l_prev, double tol);

}  // namespace privlogit::protocol

#endif  // PRIVLOGIT_PROTOCOL_CONVERGENCE_HPP_

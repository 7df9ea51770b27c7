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

#include "privlogit/secure/op_counters.hpp"

namespace privlogit::secure {

OpCounters& OpCounters::operator+=(const OpCounters& o) {
  encryptions += o.encryptions;
  adds += o.adds;
  subs += o.subs;
  scalar_muls += o.scalar_muls;
  sec_muls += o.sec_muls;
  truncates += o.truncates;
  divs += o.divs;
  sqrts += o.sqrts;
  signs += o.signs;
  reveals += o.reveals;
  choleskys += o.choleskys;
  back_substitutions += o.back_substitutions;
  inversions += o.inversions;
  decryptions_at_b += o.decryptions_at_b;
  bytes_exchanged += o.bytes_exchanged;
  rounds += o.rounds;
  return *this;
}

OpCounters operator-(const OpCounters& a, const OpCounters& b) {
  OpCounters d;
  d.encryptions = a.encryptions - b.encryptions;
  d.adds = a.adds - b.adds;
  d.subs = a.subs - b.subs;
  d.scalar_muls = a.scalar_muls - b.scalar_muls;
  d.sec_muls = a.sec_muls - b.sec_muls;
  d.truncates = a.truncates - b.truncates;
  d.divs = a.divs - b.divs;
  d.sqrts = a.sqrts - b.sqrts;
  d.signs = a.signs - b.signs;
  d.reveals = a.reveals - b.reveals;
  d.choleskys = a.choleskys - b.choleskys;
  d.back_substitutions = a.back_substitutions - b.back_substitutions;
  d.inversions = a.inversions - b.inversions;
  d.decryptions_at_b = a.decryptions_at_b - b.decryptions_at_b;
  d.bytes_exchanged = a.bytes_exchanged - b.bytes_exchanged;
  d.rounds = a.rounds - b.rounds;
  return d;
}

}  // namespace privlogit::secure

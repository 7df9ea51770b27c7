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

#ifndef PRIVLOGIT_SECURE_OP_COUNTERS_HPP_
#define PRIVLOGIT_SECURE_OP_COUNTERS_HPP_

#include <cstdint>
#include <string_view>

namespace privlogit::secure {

// Per-kind secure-operation tallies. Elementary counts are per element, so a
// batched multiplication of 10 pairs adds 10 to sec_muls but 1 to rounds.
struct OpCounters {
  uint64_t encryptions = 0;
  uint64_t adds = 0;
  uint64_t subs = 0;
  uint64_t scalar_muls = 0;
  uint64_t sec_muls = 0;
  uint64_t truncates = 0;
  uint64_t divs = 0;
  uint64_t sqrts = 0;
  uint64_t signs = 0;
  uint64_t reveals = 0;
  uint64_t choleskys = 0;
  uint64_t back_substitutions = 0;
  uint64_t inversions = 0;
  // Filled only by backends that talk to a key holder.
  uint64_t decryptions_at_b = 0;
  uint64_t bytes_exchanged = 0;
  uint64_t rounds = 0;

  OpCounters& operator+=(const OpCounters& o);
  friend OpCounters operator+(OpCounters a, const OpCounters& b) { return a += b; }
  // Field-wise difference; `later` must dominate `earlier`.
  friend OpCounters operator-(const OpCounters& later, const OpCounters& earlier);
  friend bool operator==(const OpCounters&, const OpCounters&) = default;

  // Interactive secure operations (everything that needs the key holder).
  uint64_t interactive_ops() const {
    return sec_muls + truncates + divs + sqrts + signs + reveals;
  }

  // Visits (name, value) in a fixed order; used by serialisers.
  template <class F>
  void for_each(F&& f) const {
    f(std::string_view("encryptions"), encryptions);
    f(std::string_view("adds"), adds);
    f(std::string_view("subs"), subs);
    f(std::string_view("scalar_muls"), scalar_muls);
    f(std::string_view("sec_muls"), sec_muls);
    f(std::string_view("truncates"), truncates);
    f(std::string_view("divs"), divs);
    f(std::string_view("sqrts"), sqrts);
    f(std::string_view("signs"), signs);
    f(std::string_view("reveals"), reveals);
    f(std::string_view("choleskys"), choleskys);
    f(std::string_view("back_substitutions"), back_substitutions);
    f(std::string_view("inversions"), inversions);
    f(std::string_view("decryptions_at_b"), decryptions_at_b);
    f(std::string_view("bytes_exchanged"), bytes_exchanged);
    f(std::string_view("rounds"), rounds);
  }
};

}  // namespace privlogit::secure

#endif  // PRIVLOGIT_SECURE_OP_COUNTERS_HPP_

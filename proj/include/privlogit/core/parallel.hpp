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

#ifndef PRIVLOGIT_CORE_PARALLEL_HPP_
#define PRIVLOGIT_CORE_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <mutex>

namespace privlogit {

// Runs body(i) for i in [0, n) on the OpenMP team. Exceptions cannot cross
// an OpenMP region, so the first one is captured and rethrown afterwards.
// Bodies must only write to slot i of their outputs.
template <class Body>
void parallel_for(size_t n, Body&& body) {
  std::exception_ptr first;
  std::mutex mu;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace privlogit

#endif  // PRIVLOGIT_CORE_PARALLEL_HPP_

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

#ifndef PRIVLOGIT_TOOLS_EXIT_CODES_HPP_
#define PRIVLOGIT_TOOLS_EXIT_CODES_HPP_

#include <exception>

namespace privlogit::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfig = 2,
  kAbort = 3,
  kDivergence = 4,
};

// Classifies the exception currently being handled.
ExitCode exit_code_for(const std::exception_ptr& e);

}  // namespace privlogit::cli

#endif  // PRIVLOGIT_TOOLS_EXIT_CODES_HPP_

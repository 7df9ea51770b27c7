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

#ifndef PRIVLOGIT_ERRORS_HPP_
#define PRIVLOGIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace privlogit {

// Base of every error raised by the library. Callers that only need to know
// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of matrices/vectors disagree. Always a caller bug.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Newton iteration broke down (indefinite Hessian or non-finite objective).
class Diverged : public Error {
 public:
  using Error::Error;
};

// Fixed-point magnitude overflow.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A decoded residue landed in the forbidden band between the positive and
// negative ranges. Indicates a protocol bug or an undetected overflow.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class MalformedCiphertext : public Error {
 public:
  using Error::Error;
};

// Secure division / square root called on a non-positive operand.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class PartitionError : public Error {
 public:
  using Error::Error;
};

// A session was aborted: handshake mismatch, malformed frame, timeout, or a
// peer that sent Abort.
class ProtocolAbort : public Error {
 public:
  using Error::Error;
};

}  // namespace privlogit

#endif  // PRIVLOGIT_ERRORS_HPP_

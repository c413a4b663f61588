// Copyright 2026 The hankelgf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hankelgf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad field, malformed input,
/// degree out of range, pair invariant broken, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A linear system was posed on a matrix that turned out to be singular.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured object budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction was observed to fail.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace hankelgf

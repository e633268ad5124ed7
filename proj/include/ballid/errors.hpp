// Copyright 2026 The ballid Authors
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

#ifndef BALLID_ERRORS_HPP_
#define BALLID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ballid {

// Bad arguments, malformed files, violated preconditions. CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A metric that has no value for the given input (zero-norm vector, empty
// outcome list). Reported as invalid input by the CLI.
class UndefinedMetric : public InvalidInput {
 public:
  explicit UndefinedMetric(const std::string& what) : InvalidInput(what) {}
};

// Object state that cannot support the requested operation.
class InvalidState : public InvalidInput {
 public:
  explicit InvalidState(const std::string& what) : InvalidInput(what) {}
};

// Decomposition failures, non-finite intermediate values. CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// File open/read/write failures. CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ballid

#endif  // BALLID_ERRORS_HPP_

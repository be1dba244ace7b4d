// Copyright 2026 The dqc1sim Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dqc1 {

/// Malformed circuit text. Carries the 1-based position of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A structurally invalid gate, circuit, instance or parameter.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested computation exceeds a configured simulation cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A BQP source circuit whose acceptance probability lies strictly inside
/// (delta, 1 - delta).
class PromiseViolation : public std::runtime_error {
 public:
  PromiseViolation(double q, double delta)
      : std::runtime_error("promise violated: q = " + std::to_string(q) +
                           " lies strictly between delta = " +
                           std::to_string(delta) + " and 1 - delta"),
        q_(q),
        delta_(delta) {}

  double q() const { return q_; }
  double delta() const { return delta_; }

 private:
  double q_;
  double delta_;
};

}  // namespace dqc1

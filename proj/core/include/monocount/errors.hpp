/*
 * Copyright 2026 The monocount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monocount {

/// Bad arguments to a constructor or operation (non-prime p, zero coefficient, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-width integer arithmetic would have wrapped.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An enumeration would exceed the configured work limit.
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(std::string what_limit, unsigned long long required, unsigned long long limit)
      : std::runtime_error(what_limit + " requires " + std::to_string(required) +
                           " evaluations, limit is " + std::to_string(limit)),
        name_(std::move(what_limit)),
        required_(required),
        limit_(limit) {}

  const std::string& name() const noexcept { return name_; }
  unsigned long long required() const noexcept { return required_; }
  unsigned long long limit() const noexcept { return limit_; }

 private:
  std::string name_;
  unsigned long long required_;
  unsigned long long limit_;
};

/// A floating-point character sum failed to land on an integer, or two routes disagreed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Equation file syntax or validation error with a 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace monocount

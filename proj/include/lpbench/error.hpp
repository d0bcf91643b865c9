// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpbench {

/// Bad caller input: out-of-range node ids, empty score lists, NaNs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric parameter outside its documented domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, const std::string& source = "")
      : std::runtime_error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) +
                           ": " + what),
        line_(line),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Rejection sampling gave up; the graph is too dense for the request.
class SaturationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator could not satisfy its structural constraints.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpbench

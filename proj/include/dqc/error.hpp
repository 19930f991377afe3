// Copyright 2026 The dqc Authors
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

namespace dqc {

/// Malformed circuit text. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason, const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ": ") +
                           (line == 0 ? "" : "line " + std::to_string(line) + ": ") + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

/// A circuit contains a gate the target format cannot express.
class SerializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(std::size_t gate_index, const std::string& what)
      : std::runtime_error("gate " + std::to_string(gate_index) + ": " + what),
        gate_index_(gate_index) {}

  std::size_t gate_index() const noexcept { return gate_index_; }

 private:
  std::size_t gate_index_;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential routine was asked to run past its size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dqc

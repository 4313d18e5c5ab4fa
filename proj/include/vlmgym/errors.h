// Copyright 2026 The vlmgym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VLMGYM_ERRORS_H_
#define VLMGYM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vlmgym {

class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AssetMissing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by parse_perception. line/column are 1-based positions in the
// submitted text.
class MalformedPerception : public std::runtime_error {
 public:
  MalformedPerception(std::size_t line, std::size_t column,
                      const std::string& what)
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

// Agent could not produce a response (endpoint unreachable, retries
// exhausted, replay log exhausted).
class AgentFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Endpoint answered but the reply carried no text content.
class MalformedReply : public AgentFailure {
 public:
  using AgentFailure::AgentFailure;
};

}  // namespace vlmgym

#endif  // VLMGYM_ERRORS_H_

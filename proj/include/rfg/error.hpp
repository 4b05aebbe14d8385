// Copyright 2026 The rfgames Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace rfg {

enum class ErrorCode {
  UnknownIdentifier,
  InvalidArgument,
  Disconnected,
  NotSeparated,
  NotUniform,
  IncompatibleWitness,
  NotCompleteObservation,
  NotMdp,
  NotPomdp,
  HorizonMismatch,
  Inadmissible,
  UndefinedHistory,
  OutOfRange,
  Parse,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries a code so callers (and the
/// CLI exit-code mapping) can tell precondition failures from parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace rfg

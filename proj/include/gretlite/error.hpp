// Copyright 2026 The gretlite Authors
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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gretlite {

enum class ErrorCode {
  // schema
  kDuplicateName,
  kUnknownClass,
  kUnknownSupertype,
  kInheritanceCycle,
  kAttributeRedeclared,
  // graph
  kAbstractInstantiation,
  kDeadElement,
  kEndpointType,
  kUndeclaredAttribute,
  kTypeMismatch,
  // parsing
  kSyntax,
  kUnboundVariable,
  // evaluation
  kCardinality,
  kIndexOutOfRange,
  kArity,
  kDuplicateKey,
  kDivisionByZero,
  // transformation
  kUnresolvableArchetype,
  kArchetypeCollision,
  kRoundLimit,
  kNotInPlace,
  kMalformedTemplate,
  // io
  kDuplicateId,
  kDanglingEndpoint,
  kSchemaMismatch,
  kIo,
};

std::string_view to_string(ErrorCode code);

struct SourcePos {
  int line = 1;
  int column = 1;
};

// Every user-facing failure in the library is reported as an Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, SourcePos pos)
      : std::runtime_error(std::to_string(pos.line) + ":" +
                           std::to_string(pos.column) + ": " + message),
        code_(code),
        pos_(pos) {}

  ErrorCode code() const { return code_; }
  const std::optional<SourcePos>& pos() const { return pos_; }

 private:
  ErrorCode code_;
  std::optional<SourcePos> pos_;
};

}  // namespace gretlite

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

#include "gretlite/error.hpp"

namespace gretlite {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateName: return "duplicate-name";
    case ErrorCode::kUnknownClass: return "unknown-class";
    case ErrorCode::kUnknownSupertype: return "unknown-supertype";
    case ErrorCode::kInheritanceCycle: return "inheritance-cycle";
    case ErrorCode::kAttributeRedeclared: return "attribute-redeclared";
    case ErrorCode::kAbstractInstantiation: return "abstract-instantiation";
    case ErrorCode::kDeadElement: return "dead-element";
    case ErrorCode::kEndpointType: return "endpoint-type";
    case ErrorCode::kUndeclaredAttribute: return "undeclared-attribute";
    case ErrorCode::kTypeMismatch: return "type-mismatch";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kUnboundVariable: return "unbound-variable";
    case ErrorCode::kCardinality: return "cardinality";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kArity: return "arity";
    case ErrorCode::kDuplicateKey: return "duplicate-key";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kUnresolvableArchetype: return "unresolvable-archetype";
    case ErrorCode::kArchetypeCollision: return "archetype-collision";
    case ErrorCode::kRoundLimit: return "round-limit";
    case ErrorCode::kNotInPlace: return "not-in-place";
    case ErrorCode::kMalformedTemplate: return "malformed-template";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kDanglingEndpoint: return "dangling-endpoint";
    case ErrorCode::kSchemaMismatch: return "schema-mismatch";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace gretlite

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

#include <string_view>

#include "gretlite/gretl/transformation.hpp"

namespace gretlite::gretl {

// Script grammar (see docs/grammar.md):
//
//   transformation NAME ;
//   CreateVertices T <== Q ;     CreateEdges T <== Q ;
//   SetAttributes T.a <== Q ;    Delete Q ;
//   CreateSubgraph TEMPLATE <== Q ;
//   MatchReplace TEMPLATE <== Q ;
//   Iteratively { STATEMENT+ }
//   NAME := Q ;
Transformation parse_script(std::string_view text);

// Throws kMalformedTemplate for REF vertices when refs are not allowed.
void validate_template(const Template& pattern, bool allow_refs);

}  // namespace gretlite::gretl

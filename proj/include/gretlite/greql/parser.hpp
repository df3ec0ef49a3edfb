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

#include <string>
#include <string_view>
#include <vector>

#include "gretlite/greql/ast.hpp"
#include "gretlite/lexer.hpp"

namespace gretlite::greql {

struct ParseOptions {
  // Names bound outside the query (script variables, CLI bindings).
  std::vector<std::string> external_names;
  // Whether `$` may appear (template expressions only).
  bool allow_dollar = false;
};

// A parsed query. Identifiers starting with `img_` / `arch_` are always
// accepted by the static check; they resolve to traceability maps at
// evaluation time.
struct Query {
  ExprPtr root;
  std::string text;
};

Query parse_query(std::string_view text, const ParseOptions& options = {});

// Parses one expression from the stream and stops at the first token that
// cannot continue it. Used by the script parser for embedded queries.
ExprPtr parse_expression(TokenStream& tokens, const ParseOptions& options);

bool is_reserved_word(std::string_view word);

}  // namespace gretlite::greql

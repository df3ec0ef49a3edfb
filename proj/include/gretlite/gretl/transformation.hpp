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
#include <variant>
#include <vector>

#include "gretlite/greql/parser.hpp"

namespace gretlite::gretl {

struct AttributeAssignment {
  std::string name;
  greql::ExprPtr value;
};

// NEW vertices are created with class + archetype; REF vertices preserve
// the element their expression (usually `$[i]`) evaluates to.
struct TemplateVertex {
  enum class Kind { kNew, kRef };

  Kind kind = Kind::kNew;
  std::string alias;  // synthetic "#n" for anonymous vertices
  std::string class_name;  // kNew only
  greql::ExprPtr expr;  // archetype (kNew) or reference (kRef)
  std::vector<AttributeAssignment> attributes;
  SourcePos pos;
};

struct TemplateEdge {
  std::string class_name;
  std::size_t start = 0;  // index into Template::vertices
  std::size_t end = 0;
  greql::ExprPtr archetype;  // optional; unregistered when absent
  std::vector<AttributeAssignment> attributes;
  SourcePos pos;
};

struct Template {
  std::vector<TemplateVertex> vertices;
  std::vector<TemplateEdge> edges;

  bool has_refs() const;
};

struct CreateVertices {
  std::string class_name;
  greql::Query query;
};

struct CreateEdges {
  std::string class_name;
  greql::Query query;
};

struct SetAttributes {
  std::string class_name;
  std::string attribute;
  greql::Query query;
};

struct CreateSubgraph {
  Template pattern;
  greql::Query query;
};

struct MatchReplace {
  Template pattern;
  greql::Query query;
};

struct Delete {
  greql::Query query;
};

// NAME := QUERY; binds a script variable for later queries.
struct Assign {
  std::string name;
  greql::Query query;
};

struct Statement;

struct Iteratively {
  std::vector<Statement> body;
};

struct Statement {
  using Op = std::variant<CreateVertices, CreateEdges, SetAttributes,
                          CreateSubgraph, MatchReplace, Delete, Assign,
                          Iteratively>;
  Op op;
  SourcePos pos;
};

std::string_view op_name(const Statement& statement);

struct Transformation {
  std::string name;
  std::vector<Statement> statements;
};

}  // namespace gretlite::gretl

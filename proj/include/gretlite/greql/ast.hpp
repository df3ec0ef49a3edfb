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

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gretlite/error.hpp"
#include "gretlite/ids.hpp"
#include "gretlite/value.hpp"

namespace gretlite::greql {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// `T` matches T and its subclasses, `T!` only T itself.
struct TypeRestriction {
  std::string name;
  bool exact = false;
};

struct Literal {
  Value value;
};

struct VarRef {
  std::string name;
};

// `$`, the current member during template application.
struct DollarRef {};

// V{T, ...} / E{T, ...}; no restrictions means every element of the kind.
struct ElementSetExpr {
  ElementKind kind = ElementKind::kVertex;
  std::vector<TypeRestriction> types;
};

struct Declaration {
  std::vector<std::string> names;
  ExprPtr domain;
};

enum class ReportKind { kList, kSet, kMap };

// from DECLS [with FILTER] report* EXPRS end
struct Comprehension {
  std::vector<Declaration> declarations;
  ExprPtr filter;  // may be null
  ReportKind kind = ReportKind::kList;
  // Several report expressions form a tuple per iteration. For kMap,
  // `report` has the key and `map_value` the value.
  std::vector<ExprPtr> report;
  ExprPtr map_value;
};

enum class StepDirection { kForward, kBackward, kEither, kAggregation };

struct PathStep {
  StepDirection direction = StepDirection::kForward;
  std::vector<std::string> edge_classes;
};

// `start STEP+` yields the reachable vertex set; with a target it yields
// whether the target is reachable.
struct PathExpr {
  ExprPtr start;
  std::vector<PathStep> steps;
  ExprPtr target;  // may be null
};

struct Call {
  std::string name;
  std::vector<TypeRestriction> type_args;
  std::vector<ExprPtr> args;
};

// map(k -> v, ...)
struct MapConstructor {
  std::vector<std::pair<ExprPtr, ExprPtr>> entries;
};

enum class UnaryOp { kNot, kNegate };

struct Unary {
  UnaryOp op = UnaryOp::kNot;
  ExprPtr operand;
};

enum class BinaryOp {
  kAnd,
  kOr,
  kEqual,
  kNotEqual,
  kLess,
  kLessEqual,
  kGreater,
  kGreaterEqual,
  kAdd,
  kSubtract,
  kMultiply,
  kDivide,
  kModulo,
  kConcat,
};

struct Binary {
  BinaryOp op = BinaryOp::kAnd;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Conditional {
  ExprPtr condition;
  ExprPtr then_branch;
  ExprPtr else_branch;
};

// base[index]: tuple/list position or map lookup.
struct Index {
  ExprPtr base;
  ExprPtr index;
};

struct AttributeAccess {
  ExprPtr base;
  std::string attribute;
};

struct Expr {
  using Node = std::variant<Literal, VarRef, DollarRef, ElementSetExpr,
                            Comprehension, PathExpr, Call, MapConstructor,
                            Unary, Binary, Conditional, Index, AttributeAccess>;
  Node node;
  SourcePos pos;
};

template <typename T>
ExprPtr make_expr(T node, SourcePos pos) {
  return std::make_unique<Expr>(Expr{std::move(node), pos});
}

}  // namespace gretlite::greql

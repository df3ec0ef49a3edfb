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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gretlite/graph.hpp"
#include "gretlite/greql/ast.hpp"
#include "gretlite/greql/parser.hpp"
#include "gretlite/value.hpp"

namespace gretlite::greql {

// Free variables of a query. Comprehension declarations shadow these.
struct Bindings {
  std::unordered_map<std::string, Value> variables;
  std::optional<Value> dollar;
  // Consulted for names not found in `variables` (traceability maps).
  std::function<std::optional<Value>(std::string_view)> resolver;
};

// Evaluation is read-only on the graph and deterministic: comprehensions
// iterate domains in order, element sets follow creation order.
Value evaluate(const Expr& expr, const Graph& graph, const Bindings& bindings);
Value evaluate(const Query& query, const Graph& graph,
               const Bindings& bindings = {});

// Applies the steps in sequence to the frontier {start}.
Set eval_path(const Graph& graph, VertexId start,
              std::span<const PathStep> steps);

// `type_args` carries the `{T, ...}` part of calls like degree{T}(v).
Value call_builtin(const Graph& graph, std::string_view name,
                   std::span<const TypeRestriction> type_args,
                   std::span<const Value> args);

}  // namespace gretlite::greql

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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gretlite/graph.hpp"
#include "gretlite/greql/evaluator.hpp"
#include "gretlite/gretl/traceability.hpp"
#include "gretlite/gretl/transformation.hpp"

namespace gretlite::gretl {

inline constexpr std::size_t kDefaultRoundLimit = 10'000;

struct MatchReplaceStats {
  std::size_t applied = 0;
  std::size_t skipped = 0;
  // Positions of the applied matches in the query result.
  std::vector<std::size_t> applied_matches;
};

// Holds the graphs of one transformation run. Out-place contexts read a
// source graph that they never modify and write a fresh target graph;
// in-place contexts read and write the same graph.
class ExecutionContext {
 public:
  // Out-place. A null source behaves as an empty graph.
  ExecutionContext(const Graph* source,
                   std::shared_ptr<const Schema> target_schema,
                   std::string target_name = "g");
  // In-place.
  explicit ExecutionContext(Graph graph);

  ExecutionContext(const ExecutionContext&) = delete;
  ExecutionContext& operator=(const ExecutionContext&) = delete;

  bool in_place() const { return in_place_; }
  const Graph& query_graph() const { return in_place_ ? target_ : *source_; }
  const Graph& target() const { return target_; }
  const TraceabilityMap& trace() const { return trace_; }
  Graph release_target() && { return std::move(target_); }
  TraceabilityMap release_trace() && { return std::move(trace_); }

  std::size_t round_limit = kDefaultRoundLimit;

  std::size_t create_vertices(std::string_view class_name,
                              const greql::Query& query);
  std::size_t create_edges(std::string_view class_name,
                           const greql::Query& query);
  std::size_t set_attributes(std::string_view class_name,
                             std::string_view attribute,
                             const greql::Query& query);
  std::size_t create_subgraph(const Template& pattern,
                              const greql::Query& query);
  MatchReplaceStats match_replace(const Template& pattern,
                                  const greql::Query& query);
  // Returns the number of removed elements, cascaded edges included.
  std::size_t remove(const greql::Query& query);
  // Returns the number of completed rounds, the final unchanged one included.
  std::size_t iteratively(std::span<const Statement> body);
  void assign(const std::string& name, const greql::Query& query);

  // Errors are rethrown prefixed with the statement's position in the
  // script ("operation 3 (CreateEdges): ...").
  void run(std::span<const Statement> statements);
  void run(const Statement& statement);

  const std::unordered_map<std::string, Value>& variables() const {
    return variables_;
  }

 private:
  greql::Bindings bindings(std::optional<Value> dollar = std::nullopt) const;
  Value eval(const greql::Expr& expr, std::optional<Value> dollar = std::nullopt) const;
  Value eval(const greql::Query& query) const { return eval(*query.root); }
  void require_in_place(std::string_view op) const;
  void erase(const ElementRef& ref, std::vector<ElementRef>* removed);

  bool in_place_;
  std::unique_ptr<Graph> empty_source_;
  const Graph* source_ = nullptr;
  Graph target_;
  TraceabilityMap trace_;
  std::unordered_map<std::string, Value> variables_;
};

struct ExecutionResult {
  Graph graph;
  TraceabilityMap trace;
};

struct ExecuteOptions {
  std::size_t round_limit = kDefaultRoundLimit;
};

// Runs the statements in order. In-place runs copy the source graph and
// require target_schema to be the source's schema (null means "the
// source's"). Out-place runs start from an empty target named after the
// transformation.
ExecutionResult execute(const Transformation& transformation,
                        const Graph* source,
                        std::shared_ptr<const Schema> target_schema,
                        bool in_place, const ExecuteOptions& options = {});

}  // namespace gretlite::gretl

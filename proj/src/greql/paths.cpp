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

#include <unordered_set>

#include "gretlite/error.hpp"
#include "gretlite/greql/evaluator.hpp"

namespace gretlite::greql {

namespace {

EdgeClassFilter step_filter(const Graph& graph, const PathStep& step) {
  EdgeClassFilter filter(graph.schema(), step.edge_classes);
  if (step.direction == StepDirection::kAggregation) {
    for (const auto& name : step.edge_classes) {
      if (!graph.schema().find_edge_class(name)->is_aggregation) {
        throw Error(ErrorCode::kTypeMismatch,
                    "edge class '" + name +
                        "' is not an aggregation and cannot be traversed "
                        "with <>--");
      }
    }
  }
  return filter;
}

bool traverses(const Graph& graph, const PathStep& step,
               const EdgeClassFilter& filter, const Incidence& inc) {
  const EdgeClass& cls = graph.class_of(inc.edge);
  switch (step.direction) {
    case StepDirection::kForward:
      if (!inc.outgoing) return false;
      break;
    case StepDirection::kBackward:
      if (inc.outgoing) return false;
      break;
    case StepDirection::kEither:
      break;
    case StepDirection::kAggregation:
      if (!inc.outgoing || !cls.is_aggregation) return false;
      break;
  }
  return filter.matches(cls);
}

}  // namespace

Set eval_path(const Graph& graph, VertexId start,
              std::span<const PathStep> steps) {
  if (!graph.is_live(start)) {
    throw Error(ErrorCode::kDeadElement,
                "path start v" + std::to_string(start.value) +
                    " is not a live vertex");
  }
  std::vector<VertexId> frontier{start};
  for (const auto& step : steps) {
    EdgeClassFilter filter = step_filter(graph, step);
    std::vector<VertexId> next;
    std::unordered_set<VertexId> seen;
    for (VertexId v : frontier) {
      for (const auto& inc : graph.incidences(v)) {
        if (!traverses(graph, step, filter, inc)) continue;
        VertexId other = inc.outgoing ? graph.end_of(inc.edge)
                                      : graph.start_of(inc.edge);
        if (seen.insert(other).second) next.push_back(other);
      }
    }
    frontier = std::move(next);
  }
  SetBuilder out;
  for (VertexId v : frontier) out.insert(Value(v));
  return std::move(out).build();
}

}  // namespace gretlite::greql

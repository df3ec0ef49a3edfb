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

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gretlite/graph.hpp"
#include "gretlite/greql/parser.hpp"
#include "gretlite/gretl/engine.hpp"
#include "gretlite/gretl/transformation.hpp"

// Fixture loading and property checks shared by the unit tests and the
// acceptance runner. Every check returns a description of the first
// violation, or nothing.
namespace gretlite::testing {

using Failure = std::optional<std::string>;

std::filesystem::path corpus_dir();
std::string corpus_text(std::string_view relative);
// "graph1" loads schemas/graph1.gls. Schemas are cached.
std::shared_ptr<const Schema> corpus_schema(std::string_view name);
Graph corpus_graph(std::string_view file, std::string_view schema);
greql::Query corpus_query(std::string_view file);
gretl::Transformation corpus_script(std::string_view file);

Value query(const Graph& g, std::string_view text);

// Rendered answer of a counting-task query ("04" .. "08") per the oracles.
std::string oracle_rendering(std::string_view task, const Graph& g);

Failure check_trace_bijective(const Graph& target,
                              const gretl::TraceabilityMap& trace);
Failure check_applied_disjoint(const Value& matches,
                               const gretl::MatchReplaceStats& stats);
Failure check_round_trip(const Graph& g);
// Compares a handful of comprehensions over a graph1 graph with direct
// enumeration of the graph.
Failure check_comprehensions(const Graph& g);
Failure check_source_isolation(const Graph& source,
                               const gretl::Transformation& script,
                               std::shared_ptr<const Schema> target_schema);
// Runs the full corpus twice in scratch copies and compares all outputs.
Failure check_corpus_determinism();

}  // namespace gretlite::testing

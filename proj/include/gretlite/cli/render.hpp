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

#include "gretlite/graph.hpp"
#include "gretlite/gretl/traceability.hpp"
#include "gretlite/value.hpp"

namespace gretlite::cli {

// Printed form of a query result. Set members and map entries are sorted by
// their rendering (recursively), so output does not depend on evaluation
// order. A top-level map prints one `key -> value` line per entry and a
// top-level string prints unquoted; anything else prints as a single line.
// The text always ends in a newline.
std::string render_result(const Value& value);

// Order-independent single-line rendering.
std::string render_canonical(const Value& value);

// One `Class: archetype -> label` line per live trace entry, labels as
// written by save_graph.
std::string render_trace(const Graph& target, const gretl::TraceabilityMap& trace);

}  // namespace gretlite::cli

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
#include <string_view>

#include "gretlite/graph.hpp"

namespace gretlite::io {

// Parses a .glg document against `schema`. Elements are created in file
// order. The header's schema name must equal schema->name().
Graph load_graph(std::string_view text, std::shared_ptr<const Schema> schema);

// Vertices then edges in creation order, renumbered v1.. and e1..; every
// attribute is written, in declaration order.
std::string save_graph(const Graph& graph);

// The label save_graph gives to a live element.
std::string saved_label(const Graph& graph, const ElementRef& ref);

}  // namespace gretlite::io

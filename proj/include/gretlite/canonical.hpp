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

namespace gretlite {

// Isomorphism key for graphs whose vertex order is preserved: vertices are
// renamed by their rank in creation order, edges become sorted
// (class, attributes, start rank, end rank) lines. Edge order, element ids
// and dead slots do not affect the result.
std::string canonical_form(const Graph& graph);

}  // namespace gretlite

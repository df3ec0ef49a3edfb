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

#include "gretlite/canonical.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace gretlite {

namespace {

std::string attribute_text(const Graph& graph, const ElementRef& ref) {
  const ClassBase& cls = graph.class_of(ref);
  auto values = graph.attributes(ref);
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += cls.attributes[i].name + "=" + values[i].to_string();
  }
  return out + "}";
}

}  // namespace

std::string canonical_form(const Graph& graph) {
  std::unordered_map<VertexId, std::size_t> rank;
  std::string out = "schema " + graph.schema().name() + "\n";
  for (VertexId v : graph.vertices()) {
    std::size_t r = rank.size();
    rank.emplace(v, r);
    out += "v " + std::to_string(r) + " " + graph.class_of(v).name + " " +
           attribute_text(graph, v) + "\n";
  }
  std::vector<std::string> edges;
  for (EdgeId e : graph.edges()) {
    edges.push_back("e " + graph.class_of(e).name + " " +
                    attribute_text(graph, e) + " " +
                    std::to_string(rank.at(graph.start_of(e))) + " " +
                    std::to_string(rank.at(graph.end_of(e))) + "\n");
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& line : edges) out += line;
  return out;
}

}  // namespace gretlite

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

#include "gretlite/io/dot.hpp"

#include <unordered_map>

namespace gretlite::io {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

std::string attribute_text(const Graph& graph, const ElementRef& ref) {
  const ClassBase& cls = graph.class_of(ref);
  auto values = graph.attributes(ref);
  std::string out;
  for (std::size_t i = 0; i < cls.attributes.size(); ++i) {
    if (i) out += ", ";
    out += cls.attributes[i].name + " = " + values[i].to_string();
  }
  return out;
}

}  // namespace

std::string export_dot(const Graph& graph) {
  std::string out = "digraph G {\n";
  std::unordered_map<std::uint32_t, std::size_t> rank;
  std::size_t n = 0;
  for (VertexId v : graph.vertices()) {
    rank.emplace(v.value, ++n);
    std::string label = graph.class_of(v).name + "\nv" + std::to_string(n) +
                        "\n" + attribute_text(graph, v);
    out += "  v" + std::to_string(n) + " [shape=box, label=\"" + escape(label) +
           "\"];\n";
  }
  for (EdgeId e : graph.edges()) {
    out += "  v" + std::to_string(rank.at(graph.start_of(e).value)) + " -> v" +
           std::to_string(rank.at(graph.end_of(e).value)) + " [label=\"" +
           escape(graph.class_of(e).name) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace gretlite::io

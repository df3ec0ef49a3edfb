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

#include "gretlite/cli/render.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace gretlite::cli {

namespace {

std::string join(std::vector<std::string> parts, bool sort) {
  if (sort) std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

std::vector<std::string> rendered_items(std::span<const Value> items) {
  std::vector<std::string> out;
  for (const auto& v : items) out.push_back(render_canonical(v));
  return out;
}

std::vector<std::string> rendered_entries(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m.entries()) {
    out.push_back(render_canonical(k) + " -> " + render_canonical(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string render_canonical(const Value& value) {
  if (const auto* s = value.get_if<Set>()) {
    return "{" + join(rendered_items(s->items()), true) + "}";
  }
  if (const auto* l = value.get_if<List>()) {
    return "[" + join(rendered_items(l->items()), false) + "]";
  }
  if (const auto* t = value.get_if<Tuple>()) {
    return "(" + join(rendered_items(t->items()), false) + ")";
  }
  if (const auto* m = value.get_if<Map>()) {
    return "{" + join(rendered_entries(*m), false) + "}";
  }
  return value.to_string();
}

std::string render_result(const Value& value) {
  if (const auto* m = value.get_if<Map>(); m != nullptr && !m->empty()) {
    std::string out;
    for (const auto& line : rendered_entries(*m)) out += line + "\n";
    return out;
  }
  if (const auto* s = value.get_if<std::string>()) return *s + "\n";
  return render_canonical(value) + "\n";
}

std::string render_trace(const Graph& target,
                         const gretl::TraceabilityMap& trace) {
  std::unordered_map<std::uint32_t, std::size_t> vertex_rank;
  std::unordered_map<std::uint32_t, std::size_t> edge_rank;
  for (VertexId v : target.vertices()) vertex_rank.emplace(v.value, vertex_rank.size() + 1);
  for (EdgeId e : target.edges()) edge_rank.emplace(e.value, edge_rank.size() + 1);
  std::string out;
  for (const auto& entry : trace.entries()) {
    std::string label;
    if (const auto* v = std::get_if<VertexId>(&entry.image)) {
      label = "v" + std::to_string(vertex_rank.at(v->value));
    } else {
      label = "e" + std::to_string(edge_rank.at(std::get<EdgeId>(entry.image).value));
    }
    out += entry.class_name + ": " + render_canonical(entry.archetype) + " -> " +
           label + "\n";
  }
  return out;
}

}  // namespace gretlite::cli

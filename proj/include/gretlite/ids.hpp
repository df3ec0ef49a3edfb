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

#include <compare>
#include <cstdint>
#include <functional>
#include <variant>

namespace gretlite {

// Vertex and edge ids are separate namespaces; both start at 1.
struct VertexId {
  std::uint32_t value = 0;
  friend auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

using ElementRef = std::variant<VertexId, EdgeId>;

enum class ElementKind { kVertex, kEdge };

inline ElementKind kind_of(const ElementRef& ref) {
  return std::holds_alternative<VertexId>(ref) ? ElementKind::kVertex
                                               : ElementKind::kEdge;
}

}  // namespace gretlite

template <>
struct std::hash<gretlite::VertexId> {
  std::size_t operator()(gretlite::VertexId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

template <>
struct std::hash<gretlite::EdgeId> {
  std::size_t operator()(gretlite::EdgeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value) ^ 0x9e3779b97f4a7c15ULL;
  }
};

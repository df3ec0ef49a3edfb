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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gretlite/ids.hpp"
#include "gretlite/schema.hpp"
#include "gretlite/value.hpp"

namespace gretlite {

enum class Direction { kOut, kIn, kBoth };

// A set of edge classes, each matching itself and its subclasses.
// An empty filter matches every edge.
class EdgeClassFilter {
 public:
  EdgeClassFilter() = default;
  // Throws kUnknownClass for names that are not edge classes.
  EdgeClassFilter(const Schema& schema, std::span<const std::string> names);

  bool matches(const EdgeClass& cls) const;
  bool empty() const { return classes_.empty(); }

 private:
  std::vector<std::uint32_t> classes_;
};

struct Incidence {
  EdgeId edge;
  bool outgoing = false;  // this vertex is the edge's start
};

struct DeletedElements {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t size() const { return vertices.size() + edges.size(); }
};

// Typed, directed, ordered, attributed graph. Iteration over vertices,
// edges and each vertex's incidences follows creation order. Ids are dense
// per kind and never reused.
//
// A Graph is a single-writer value; concurrent const access is safe.
class Graph {
 public:
  explicit Graph(std::shared_ptr<const Schema> schema, std::string name = "g");

  const Schema& schema() const { return *schema_; }
  const std::shared_ptr<const Schema>& schema_ptr() const { return schema_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  VertexId create_vertex(std::string_view class_name);
  EdgeId create_edge(std::string_view class_name, VertexId start, VertexId end);

  // Removes the vertex and every incident edge. Edges come first in the
  // returned set, in incidence order.
  DeletedElements delete_vertex(VertexId v);
  void delete_edge(EdgeId e);

  bool is_live(VertexId v) const;
  bool is_live(EdgeId e) const;
  bool is_live(const ElementRef& ref) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  std::size_t vertex_count() const { return live_vertices_; }
  std::size_t edge_count() const { return live_edges_; }
  // Number of ids handed out so far (live and dead).
  std::uint32_t vertex_id_bound() const {
    return static_cast<std::uint32_t>(vertices_.size());
  }
  std::uint32_t edge_id_bound() const {
    return static_cast<std::uint32_t>(edges_.size());
  }

  const VertexClass& class_of(VertexId v) const;
  const EdgeClass& class_of(EdgeId e) const;
  const ClassBase& class_of(const ElementRef& ref) const;

  VertexId start_of(EdgeId e) const;
  VertexId end_of(EdgeId e) const;

  std::span<const Incidence> incidences(VertexId v) const;
  std::vector<EdgeId> incident(VertexId v, Direction dir,
                               const EdgeClassFilter& filter = {}) const;

  void set_attribute(const ElementRef& ref, std::string_view attr,
                     const Value& value);
  const Value& get_attribute(const ElementRef& ref,
                             std::string_view attr) const;
  // All attribute values in flattened declaration order.
  std::span<const Value> attributes(const ElementRef& ref) const;

  // True iff the element's class equals or transitively specializes the
  // named class. Throws kUnknownClass.
  bool is_instance_of(const ElementRef& ref, std::string_view class_name) const;

  // Bumped by every observable change (creation, deletion, attribute write
  // of a different value).
  std::uint64_t version() const { return version_; }

 private:
  struct VertexRecord {
    bool live = true;
    std::uint32_t cls = 0;
    std::vector<Value> attrs;
    std::vector<Incidence> incidences;
  };
  struct EdgeRecord {
    bool live = true;
    std::uint32_t cls = 0;
    VertexId start;
    VertexId end;
    std::vector<Value> attrs;
  };

  const VertexRecord& vertex_record(VertexId v) const;
  const EdgeRecord& edge_record(EdgeId e) const;
  VertexRecord& vertex_record(VertexId v);
  EdgeRecord& edge_record(EdgeId e);
  void unlink(VertexId v, EdgeId e);

  std::shared_ptr<const Schema> schema_;
  std::string name_;
  std::vector<VertexRecord> vertices_;
  std::vector<EdgeRecord> edges_;
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;
  std::uint64_t version_ = 0;
};

}  // namespace gretlite

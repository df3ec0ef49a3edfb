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

#include "gretlite/graph.hpp"

#include <algorithm>

#include "gretlite/error.hpp"

namespace gretlite {

namespace {

std::string label(VertexId v) { return "v" + std::to_string(v.value); }
std::string label(EdgeId e) { return "e" + std::to_string(e.value); }

std::vector<Value> defaults_for(const ClassBase& cls) {
  std::vector<Value> attrs;
  attrs.reserve(cls.attributes.size());
  for (const auto& a : cls.attributes) attrs.push_back(default_value(a.type));
  return attrs;
}

}  // namespace

EdgeClassFilter::EdgeClassFilter(const Schema& schema,
                                 std::span<const std::string> names) {
  for (const auto& name : names) {
    const EdgeClass* cls = schema.find_edge_class(name);
    if (cls == nullptr) {
      throw Error(ErrorCode::kUnknownClass, "unknown edge class '" + name + "'");
    }
    classes_.push_back(cls->index);
  }
}

bool EdgeClassFilter::matches(const EdgeClass& cls) const {
  if (classes_.empty()) return true;
  for (auto idx : classes_) {
    if (std::binary_search(cls.ancestors.begin(), cls.ancestors.end(), idx)) {
      return true;
    }
  }
  return false;
}

Graph::Graph(std::shared_ptr<const Schema> schema, std::string name)
    : schema_(std::move(schema)), name_(std::move(name)) {}

VertexId Graph::create_vertex(std::string_view class_name) {
  const VertexClass* cls = schema_->find_vertex_class(class_name);
  if (cls == nullptr) {
    throw Error(ErrorCode::kUnknownClass,
                "unknown vertex class '" + std::string(class_name) + "'");
  }
  if (cls->is_abstract) {
    throw Error(ErrorCode::kAbstractInstantiation,
                "vertex class '" + cls->name + "' is abstract");
  }
  vertices_.push_back({true, cls->index, defaults_for(*cls), {}});
  ++live_vertices_;
  ++version_;
  return VertexId{static_cast<std::uint32_t>(vertices_.size())};
}

EdgeId Graph::create_edge(std::string_view class_name, VertexId start,
                          VertexId end) {
  const EdgeClass* cls = schema_->find_edge_class(class_name);
  if (cls == nullptr) {
    throw Error(ErrorCode::kUnknownClass,
                "unknown edge class '" + std::string(class_name) + "'");
  }
  if (cls->is_abstract) {
    throw Error(ErrorCode::kAbstractInstantiation,
                "edge class '" + cls->name + "' is abstract");
  }
  for (VertexId v : {start, end}) {
    if (!is_live(v)) {
      throw Error(ErrorCode::kDeadElement,
                  "edge '" + cls->name + "' endpoint " + label(v) +
                      " is not a live vertex");
    }
  }
  const auto& from = schema_->vertex_class(cls->from_index);
  const auto& to = schema_->vertex_class(cls->to_index);
  if (!class_of(start).specializes(from)) {
    throw Error(ErrorCode::kEndpointType,
                "edge '" + cls->name + "' must start at a " + from.name +
                    ", got " + class_of(start).name + " " + label(start));
  }
  if (!class_of(end).specializes(to)) {
    throw Error(ErrorCode::kEndpointType,
                "edge '" + cls->name + "' must end at a " + to.name +
                    ", got " + class_of(end).name + " " + label(end));
  }
  edges_.push_back({true, cls->index, start, end, defaults_for(*cls)});
  EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  vertex_record(start).incidences.push_back({id, true});
  vertex_record(end).incidences.push_back({id, false});
  ++live_edges_;
  ++version_;
  return id;
}

void Graph::unlink(VertexId v, EdgeId e) {
  auto& inc = vertex_record(v).incidences;
  // A loop has two incidences at the same vertex; remove both.
  std::erase_if(inc, [e](const Incidence& i) { return i.edge == e; });
}

void Graph::delete_edge(EdgeId e) {
  auto& rec = edge_record(e);
  rec.live = false;
  unlink(rec.start, e);
  if (rec.end != rec.start) unlink(rec.end, e);
  rec.attrs.clear();
  --live_edges_;
  ++version_;
}

DeletedElements Graph::delete_vertex(VertexId v) {
  auto& rec = vertex_record(v);
  DeletedElements deleted;
  for (const auto& inc : rec.incidences) {
    if (std::find(deleted.edges.begin(), deleted.edges.end(), inc.edge) ==
        deleted.edges.end()) {
      deleted.edges.push_back(inc.edge);
    }
  }
  for (EdgeId e : deleted.edges) delete_edge(e);
  rec.live = false;
  rec.attrs.clear();
  --live_vertices_;
  ++version_;
  deleted.vertices.push_back(v);
  return deleted;
}

bool Graph::is_live(VertexId v) const {
  return v.value >= 1 && v.value <= vertices_.size() &&
         vertices_[v.value - 1].live;
}

bool Graph::is_live(EdgeId e) const {
  return e.value >= 1 && e.value <= edges_.size() && edges_[e.value - 1].live;
}

bool Graph::is_live(const ElementRef& ref) const {
  return std::visit([this](auto id) { return is_live(id); }, ref);
}

const Graph::VertexRecord& Graph::vertex_record(VertexId v) const {
  if (!is_live(v)) {
    throw Error(ErrorCode::kDeadElement, label(v) + " is not a live vertex");
  }
  return vertices_[v.value - 1];
}

const Graph::EdgeRecord& Graph::edge_record(EdgeId e) const {
  if (!is_live(e)) {
    throw Error(ErrorCode::kDeadElement, label(e) + " is not a live edge");
  }
  return edges_[e.value - 1];
}

Graph::VertexRecord& Graph::vertex_record(VertexId v) {
  return const_cast<VertexRecord&>(std::as_const(*this).vertex_record(v));
}

Graph::EdgeRecord& Graph::edge_record(EdgeId e) {
  return const_cast<EdgeRecord&>(std::as_const(*this).edge_record(e));
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_vertices_);
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].live) out.push_back(VertexId{i + 1});
  }
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].live) out.push_back(EdgeId{i + 1});
  }
  return out;
}

const VertexClass& Graph::class_of(VertexId v) const {
  return schema_->vertex_class(vertex_record(v).cls);
}

const EdgeClass& Graph::class_of(EdgeId e) const {
  return schema_->edge_class(edge_record(e).cls);
}

const ClassBase& Graph::class_of(const ElementRef& ref) const {
  if (const auto* v = std::get_if<VertexId>(&ref)) return class_of(*v);
  return class_of(std::get<EdgeId>(ref));
}

VertexId Graph::start_of(EdgeId e) const { return edge_record(e).start; }
VertexId Graph::end_of(EdgeId e) const { return edge_record(e).end; }

std::span<const Incidence> Graph::incidences(VertexId v) const {
  return vertex_record(v).incidences;
}

std::vector<EdgeId> Graph::incident(VertexId v, Direction dir,
                                    const EdgeClassFilter& filter) const {
  std::vector<EdgeId> out;
  for (const auto& inc : vertex_record(v).incidences) {
    if (dir == Direction::kOut && !inc.outgoing) continue;
    if (dir == Direction::kIn && inc.outgoing) continue;
    if (!filter.empty() && !filter.matches(class_of(inc.edge))) continue;
    out.push_back(inc.edge);
  }
  return out;
}

void Graph::set_attribute(const ElementRef& ref, std::string_view attr,
                          const Value& value) {
  const ClassBase& cls = class_of(ref);
  auto idx = cls.attribute_index(attr);
  if (!idx) {
    throw Error(ErrorCode::kUndeclaredAttribute,
                "class '" + cls.name + "' has no attribute '" +
                    std::string(attr) + "'");
  }
  Value stored = coerce_attribute(cls.attributes[*idx].type, value, attr);
  auto& attrs = std::holds_alternative<VertexId>(ref)
                    ? vertex_record(std::get<VertexId>(ref)).attrs
                    : edge_record(std::get<EdgeId>(ref)).attrs;
  if (attrs[*idx] == stored) return;
  attrs[*idx] = std::move(stored);
  ++version_;
}

const Value& Graph::get_attribute(const ElementRef& ref,
                                  std::string_view attr) const {
  const ClassBase& cls = class_of(ref);
  auto idx = cls.attribute_index(attr);
  if (!idx) {
    throw Error(ErrorCode::kUndeclaredAttribute,
                "class '" + cls.name + "' has no attribute '" +
                    std::string(attr) + "'");
  }
  return attributes(ref)[*idx];
}

std::span<const Value> Graph::attributes(const ElementRef& ref) const {
  if (const auto* v = std::get_if<VertexId>(&ref)) {
    return vertex_record(*v).attrs;
  }
  return edge_record(std::get<EdgeId>(ref)).attrs;
}

bool Graph::is_instance_of(const ElementRef& ref,
                           std::string_view class_name) const {
  auto kind = schema_->kind_of(class_name);
  if (!kind) {
    throw Error(ErrorCode::kUnknownClass,
                "unknown class '" + std::string(class_name) + "'");
  }
  if (*kind != kind_of(ref)) {
    // Still validate liveness so dead ids fail uniformly.
    class_of(ref);
    return false;
  }
  return schema_->is_subclass(class_of(ref).name, class_name);
}

}  // namespace gretlite

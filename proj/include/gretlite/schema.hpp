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
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gretlite/ids.hpp"
#include "gretlite/value.hpp"

namespace gretlite {

enum class AttrType { kString, kInteger, kBoolean, kDouble };

std::string_view to_string(AttrType type);
std::optional<AttrType> parse_attr_type(std::string_view name);

// "" / 0 / false / 0.0
Value default_value(AttrType type);

// Returns the value as stored for an attribute of the given type, widening
// Integer to Double. Throws kTypeMismatch for anything else.
Value coerce_attribute(AttrType type, const Value& value,
                       std::string_view attr_name);

struct AttributeDecl {
  std::string name;
  AttrType type = AttrType::kString;
};

// An attribute after inheritance flattening; `origin` is the declaring class.
struct Attribute {
  std::string name;
  AttrType type = AttrType::kString;
  std::string origin;
};

struct ClassBase {
  std::string name;
  bool is_abstract = false;
  std::vector<std::string> supertypes;
  std::vector<AttributeDecl> own_attributes;

  // Inherited attributes first (in supertype order), then own ones.
  std::vector<Attribute> attributes;
  // Index within the class kind; ancestors holds sorted indices, self included.
  std::uint32_t index = 0;
  std::vector<std::uint32_t> ancestors;

  std::optional<std::size_t> attribute_index(std::string_view attr) const;
  bool specializes(const ClassBase& other) const;
};

struct VertexClass : ClassBase {};

struct EdgeClass : ClassBase {
  std::string from_class;
  std::string to_class;
  std::uint32_t from_index = 0;
  std::uint32_t to_index = 0;
  bool is_aggregation = false;
};

// The metamodel layer. Classes are append-only; references to classes stay
// valid for the lifetime of the schema.
class Schema {
 public:
  explicit Schema(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  const VertexClass& define_vertex_class(std::string name, bool is_abstract,
                                         std::vector<std::string> supertypes,
                                         std::vector<AttributeDecl> attributes);

  const EdgeClass& define_edge_class(std::string name, bool is_abstract,
                                     std::vector<std::string> supertypes,
                                     std::string from_class,
                                     std::string to_class, bool is_aggregation,
                                     std::vector<AttributeDecl> attributes);

  const VertexClass* find_vertex_class(std::string_view name) const;
  const EdgeClass* find_edge_class(std::string_view name) const;
  std::optional<ElementKind> kind_of(std::string_view name) const;

  const VertexClass& vertex_class(std::uint32_t index) const {
    return vertex_classes_[index];
  }
  const EdgeClass& edge_class(std::uint32_t index) const {
    return edge_classes_[index];
  }
  const std::deque<VertexClass>& vertex_classes() const {
    return vertex_classes_;
  }
  const std::deque<EdgeClass>& edge_classes() const { return edge_classes_; }

  // Names of `name` and all its transitive subclasses, in definition order.
  std::vector<std::string> subclass_names(std::string_view name) const;
  bool is_subclass(std::string_view sub, std::string_view super) const;

 private:
  struct Entry {
    ElementKind kind;
    std::uint32_t index;
  };

  void check_new_name(const std::string& name,
                      const std::vector<std::string>& supertypes) const;
  template <typename Class, typename Container>
  void flatten(Class& cls, const Container& pool) const;

  std::string name_;
  std::deque<VertexClass> vertex_classes_;
  std::deque<EdgeClass> edge_classes_;
  std::unordered_map<std::string, Entry> by_name_;
};

}  // namespace gretlite

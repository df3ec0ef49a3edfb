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

#include "gretlite/schema.hpp"

#include <algorithm>

#include "gretlite/error.hpp"

namespace gretlite {

std::string_view to_string(AttrType type) {
  switch (type) {
    case AttrType::kString: return "String";
    case AttrType::kInteger: return "Integer";
    case AttrType::kBoolean: return "Boolean";
    case AttrType::kDouble: return "Double";
  }
  return "?";
}

std::optional<AttrType> parse_attr_type(std::string_view name) {
  if (name == "String") return AttrType::kString;
  if (name == "Integer") return AttrType::kInteger;
  if (name == "Boolean") return AttrType::kBoolean;
  if (name == "Double") return AttrType::kDouble;
  return std::nullopt;
}

Value default_value(AttrType type) {
  switch (type) {
    case AttrType::kString: return Value(std::string());
    case AttrType::kInteger: return Value(std::int64_t{0});
    case AttrType::kBoolean: return Value(false);
    case AttrType::kDouble: return Value(0.0);
  }
  return Value();
}

Value coerce_attribute(AttrType type, const Value& value,
                       std::string_view attr_name) {
  switch (type) {
    case AttrType::kString:
      if (value.is<std::string>()) return value;
      break;
    case AttrType::kInteger:
      if (value.is<std::int64_t>()) return value;
      break;
    case AttrType::kBoolean:
      if (value.is<bool>()) return value;
      break;
    case AttrType::kDouble:
      if (value.is<double>()) return value;
      if (value.is<std::int64_t>()) {
        return Value(static_cast<double>(value.as<std::int64_t>()));
      }
      break;
  }
  throw Error(ErrorCode::kTypeMismatch,
              "attribute '" + std::string(attr_name) + "' is " +
                  std::string(to_string(type)) + ", got " +
                  std::string(to_string(value.type())) + " " +
                  value.to_string());
}

std::optional<std::size_t> ClassBase::attribute_index(
    std::string_view attr) const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == attr) return i;
  }
  return std::nullopt;
}

bool ClassBase::specializes(const ClassBase& other) const {
  return std::binary_search(ancestors.begin(), ancestors.end(), other.index);
}

void Schema::check_new_name(const std::string& name,
                            const std::vector<std::string>& supertypes) const {
  if (name.empty()) {
    throw Error(ErrorCode::kSyntax, "class name must not be empty");
  }
  if (std::find(supertypes.begin(), supertypes.end(), name) !=
      supertypes.end()) {
    throw Error(ErrorCode::kInheritanceCycle,
                "class '" + name + "' lists itself as a supertype");
  }
  if (by_name_.contains(name)) {
    throw Error(ErrorCode::kDuplicateName,
                "class '" + name + "' is already defined");
  }
}

template <typename Class, typename Container>
void Schema::flatten(Class& cls, const Container& pool) const {
  std::vector<std::uint32_t> ancestors{cls.index};
  for (const auto& super_name : cls.supertypes) {
    const Class* super = nullptr;
    for (const auto& candidate : pool) {
      if (candidate.name == super_name) super = &candidate;
    }
    if (super == nullptr) {
      throw Error(ErrorCode::kUnknownSupertype,
                  "class '" + cls.name + "': unknown supertype '" +
                      super_name + "'");
    }
    ancestors.insert(ancestors.end(), super->ancestors.begin(),
                     super->ancestors.end());
    for (const auto& attr : super->attributes) {
      auto existing = cls.attribute_index(attr.name);
      if (!existing) {
        cls.attributes.push_back(attr);
      } else if (cls.attributes[*existing].origin != attr.origin) {
        throw Error(ErrorCode::kAttributeRedeclared,
                    "class '" + cls.name + "' inherits attribute '" +
                        attr.name + "' from both '" +
                        cls.attributes[*existing].origin + "' and '" +
                        attr.origin + "'");
      }
    }
  }
  for (const auto& decl : cls.own_attributes) {
    if (cls.attribute_index(decl.name)) {
      throw Error(ErrorCode::kAttributeRedeclared,
                  "class '" + cls.name + "' redeclares attribute '" +
                      decl.name + "'");
    }
    cls.attributes.push_back({decl.name, decl.type, cls.name});
  }
  std::sort(ancestors.begin(), ancestors.end());
  ancestors.erase(std::unique(ancestors.begin(), ancestors.end()),
                  ancestors.end());
  cls.ancestors = std::move(ancestors);
}

const VertexClass& Schema::define_vertex_class(
    std::string name, bool is_abstract, std::vector<std::string> supertypes,
    std::vector<AttributeDecl> attributes) {
  check_new_name(name, supertypes);
  VertexClass cls;
  cls.name = std::move(name);
  cls.is_abstract = is_abstract;
  cls.supertypes = std::move(supertypes);
  cls.own_attributes = std::move(attributes);
  cls.index = static_cast<std::uint32_t>(vertex_classes_.size());
  for (const auto& s : cls.supertypes) {
    if (find_edge_class(s) != nullptr) {
      throw Error(ErrorCode::kUnknownSupertype,
                  "vertex class '" + cls.name + "' cannot specialize edge class '" +
                      s + "'");
    }
  }
  flatten(cls, vertex_classes_);
  by_name_.emplace(cls.name, Entry{ElementKind::kVertex, cls.index});
  return vertex_classes_.emplace_back(std::move(cls));
}

const EdgeClass& Schema::define_edge_class(
    std::string name, bool is_abstract, std::vector<std::string> supertypes,
    std::string from_class, std::string to_class, bool is_aggregation,
    std::vector<AttributeDecl> attributes) {
  check_new_name(name, supertypes);
  const VertexClass* from = find_vertex_class(from_class);
  const VertexClass* to = find_vertex_class(to_class);
  if (from == nullptr || to == nullptr) {
    throw Error(ErrorCode::kUnknownClass,
                "edge class '" + name + "': unknown endpoint class '" +
                    (from == nullptr ? from_class : to_class) + "'");
  }
  EdgeClass cls;
  cls.name = std::move(name);
  cls.is_abstract = is_abstract;
  cls.supertypes = std::move(supertypes);
  cls.own_attributes = std::move(attributes);
  cls.index = static_cast<std::uint32_t>(edge_classes_.size());
  cls.from_class = std::move(from_class);
  cls.to_class = std::move(to_class);
  cls.from_index = from->index;
  cls.to_index = to->index;
  cls.is_aggregation = is_aggregation;
  for (const auto& s : cls.supertypes) {
    if (find_vertex_class(s) != nullptr) {
      throw Error(ErrorCode::kUnknownSupertype,
                  "edge class '" + cls.name +
                      "' cannot specialize vertex class '" + s + "'");
    }
  }
  flatten(cls, edge_classes_);
  by_name_.emplace(cls.name, Entry{ElementKind::kEdge, cls.index});
  return edge_classes_.emplace_back(std::move(cls));
}

const VertexClass* Schema::find_vertex_class(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end() || it->second.kind != ElementKind::kVertex) {
    return nullptr;
  }
  return &vertex_classes_[it->second.index];
}

const EdgeClass* Schema::find_edge_class(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end() || it->second.kind != ElementKind::kEdge) {
    return nullptr;
  }
  return &edge_classes_[it->second.index];
}

std::optional<ElementKind> Schema::kind_of(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second.kind;
}

std::vector<std::string> Schema::subclass_names(std::string_view name) const {
  std::vector<std::string> out;
  if (const auto* v = find_vertex_class(name)) {
    for (const auto& c : vertex_classes_) {
      if (c.specializes(*v)) out.push_back(c.name);
    }
  } else if (const auto* e = find_edge_class(name)) {
    for (const auto& c : edge_classes_) {
      if (c.specializes(*e)) out.push_back(c.name);
    }
  }
  return out;
}

bool Schema::is_subclass(std::string_view sub, std::string_view super) const {
  if (const auto* s = find_vertex_class(sub)) {
    const auto* p = find_vertex_class(super);
    return p != nullptr && s->specializes(*p);
  }
  if (const auto* s = find_edge_class(sub)) {
    const auto* p = find_edge_class(super);
    return p != nullptr && s->specializes(*p);
  }
  return false;
}

}  // namespace gretlite

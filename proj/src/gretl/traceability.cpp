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

#include "gretlite/gretl/traceability.hpp"

#include <algorithm>

#include "gretlite/error.hpp"

namespace gretlite::gretl {

namespace {

const ClassBase& find_class(const Schema& schema, std::string_view name) {
  if (const auto* v = schema.find_vertex_class(name)) return *v;
  if (const auto* e = schema.find_edge_class(name)) return *e;
  throw Error(ErrorCode::kUnknownClass,
              "unknown class '" + std::string(name) + "'");
}

bool share_view(const Schema& schema, const ClassBase& a, std::string_view b) {
  if (schema.kind_of(a.name) != schema.kind_of(b)) return false;
  const ClassBase& other = find_class(schema, b);
  const auto& x = a.ancestors;
  const auto& y = other.ancestors;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

void TraceabilityMap::check_available(const Schema& schema,
                                      std::string_view class_name,
                                      const Value& archetype) const {
  const ClassBase& cls = find_class(schema, class_name);
  for (const auto& [name, by_arch] : by_class_) {
    auto it = by_arch.find(archetype);
    if (it == by_arch.end()) continue;
    if (share_view(schema, cls, name)) {
      throw Error(ErrorCode::kArchetypeCollision,
                  "archetype " + archetype.to_string() + " of a new " +
                      cls.name + " is already the archetype of a " + name);
    }
  }
}

void TraceabilityMap::add(const Schema& schema, std::string_view class_name,
                          const Value& archetype, ElementRef image) {
  check_available(schema, class_name, archetype);
  if (by_image_.contains(image)) {
    throw Error(ErrorCode::kArchetypeCollision,
                "element already has an archetype");
  }
  std::size_t slot = slots_.size();
  slots_.push_back({{std::string(class_name), archetype, image}, true});
  by_class_[std::string(class_name)].emplace(archetype, slot);
  by_image_.emplace(image, slot);
}

std::optional<ElementRef> TraceabilityMap::image(const Schema& schema,
                                                 std::string_view class_name,
                                                 const Value& archetype) const {
  find_class(schema, class_name);
  for (const auto& name : schema.subclass_names(class_name)) {
    auto cls = by_class_.find(name);
    if (cls == by_class_.end()) continue;
    auto it = cls->second.find(archetype);
    if (it != cls->second.end()) return slots_[it->second].entry.image;
  }
  return std::nullopt;
}

std::optional<Value> TraceabilityMap::archetype(const Schema& schema,
                                                std::string_view class_name,
                                                const ElementRef& image) const {
  find_class(schema, class_name);
  auto it = by_image_.find(image);
  if (it == by_image_.end()) return std::nullopt;
  const Entry& e = slots_[it->second].entry;
  if (!schema.is_subclass(e.class_name, class_name)) return std::nullopt;
  return e.archetype;
}

Map TraceabilityMap::img_map(const Schema& schema,
                             std::string_view class_name) const {
  find_class(schema, class_name);
  auto names = schema.subclass_names(class_name);
  MapBuilder out;
  for (const auto& slot : slots_) {
    if (!slot.live) continue;
    if (std::find(names.begin(), names.end(), slot.entry.class_name) ==
        names.end()) {
      continue;
    }
    out.insert(slot.entry.archetype, Value(slot.entry.image));
  }
  return std::move(out).build();
}

Map TraceabilityMap::arch_map(const Schema& schema,
                              std::string_view class_name) const {
  find_class(schema, class_name);
  auto names = schema.subclass_names(class_name);
  MapBuilder out;
  for (const auto& slot : slots_) {
    if (!slot.live) continue;
    if (std::find(names.begin(), names.end(), slot.entry.class_name) ==
        names.end()) {
      continue;
    }
    out.insert(Value(slot.entry.image), slot.entry.archetype);
  }
  return std::move(out).build();
}

void TraceabilityMap::forget(const ElementRef& image) {
  auto it = by_image_.find(image);
  if (it == by_image_.end()) return;
  Slot& slot = slots_[it->second];
  slot.live = false;
  by_class_[slot.entry.class_name].erase(slot.entry.archetype);
  by_image_.erase(it);
}

std::vector<TraceabilityMap::Entry> TraceabilityMap::entries() const {
  std::vector<Entry> out;
  for (const auto& slot : slots_) {
    if (slot.live) out.push_back(slot.entry);
  }
  return out;
}

}  // namespace gretlite::gretl

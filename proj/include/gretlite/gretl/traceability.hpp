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

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gretlite/ids.hpp"
#include "gretlite/schema.hpp"
#include "gretlite/value.hpp"

namespace gretlite::gretl {

// Per-class archetype -> image functions (img_T) and their inverses
// (arch_T). Lookups through a class T see the registrations of T and all
// of its subclasses.
class TraceabilityMap {
 public:
  struct Entry {
    std::string class_name;
    Value archetype;
    ElementRef image;
  };

  // Throws kArchetypeCollision when the archetype is already registered
  // under a class that shares a lookup view with `class_name`, i.e. the two
  // classes have a common superclass (themselves included).
  void check_available(const Schema& schema, std::string_view class_name,
                       const Value& archetype) const;
  void add(const Schema& schema, std::string_view class_name,
           const Value& archetype, ElementRef image);

  std::optional<ElementRef> image(const Schema& schema,
                                  std::string_view class_name,
                                  const Value& archetype) const;
  std::optional<Value> archetype(const Schema& schema,
                                 std::string_view class_name,
                                 const ElementRef& image) const;

  // Union views as query values, in registration order.
  Map img_map(const Schema& schema, std::string_view class_name) const;
  Map arch_map(const Schema& schema, std::string_view class_name) const;

  // Drops the entry of a deleted image, if any.
  void forget(const ElementRef& image);

  // Live entries in registration order.
  std::vector<Entry> entries() const;
  std::size_t size() const { return by_image_.size(); }

 private:
  struct Slot {
    Entry entry;
    bool live = true;
  };

  std::vector<Slot> slots_;
  // class name -> archetype -> slot index
  std::unordered_map<std::string, std::unordered_map<Value, std::size_t, ValueHash>>
      by_class_;
  std::unordered_map<ElementRef, std::size_t> by_image_;
};

}  // namespace gretlite::gretl

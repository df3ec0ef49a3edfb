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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "gretlite/ids.hpp"

namespace gretlite {

class Value;
struct SetData;
struct MapData;

struct Undefined {
  friend bool operator==(Undefined, Undefined) { return true; }
};

// Insertion-ordered, duplicate-free collection. Equality ignores order.
class Set {
 public:
  Set();
  explicit Set(std::vector<Value> items);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(const Value& v) const;
  std::span<const Value> items() const;

  friend bool operator==(const Set& a, const Set& b);

 private:
  friend class SetBuilder;
  explicit Set(std::shared_ptr<const SetData> data) : data_(std::move(data)) {}
  std::shared_ptr<const SetData> data_;
};

// Insertion-ordered map with value-equal-unique keys.
class Map {
 public:
  using Entry = std::pair<Value, Value>;

  Map();
  // Later duplicates of a key are rejected with kDuplicateKey unless the
  // value is identical.
  explicit Map(std::vector<Entry> entries);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const Value* find(const Value& key) const;
  std::span<const Entry> entries() const;

  friend bool operator==(const Map& a, const Map& b);

 private:
  friend class MapBuilder;
  explicit Map(std::shared_ptr<const MapData> data) : data_(std::move(data)) {}
  std::shared_ptr<const MapData> data_;
};

// Ordered sequence; List and Tuple differ only in their tag and rendering.
template <typename Tag>
class Sequence {
 public:
  Sequence() : items_(std::make_shared<const std::vector<Value>>()) {}
  explicit Sequence(std::vector<Value> items)
      : items_(std::make_shared<const std::vector<Value>>(std::move(items))) {}

  std::size_t size() const { return items_->size(); }
  bool empty() const { return items_->empty(); }
  std::span<const Value> items() const { return *items_; }
  const Value& operator[](std::size_t i) const { return (*items_)[i]; }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.items_ == b.items_ || *a.items_ == *b.items_;
  }

 private:
  std::shared_ptr<const std::vector<Value>> items_;
};

struct ListTag {};
struct TupleTag {};
using List = Sequence<ListTag>;
using Tuple = Sequence<TupleTag>;

enum class ValueType {
  kUndefined,
  kBoolean,
  kInteger,
  kDouble,
  kString,
  kVertex,
  kEdge,
  kSet,
  kList,
  kTuple,
  kMap,
};

std::string_view to_string(ValueType type);

// The query-result universe. Copies are cheap: collections share storage.
class Value {
 public:
  using Storage = std::variant<Undefined, bool, std::int64_t, double,
                               std::string, VertexId, EdgeId, Set, List,
                               Tuple, Map>;

  Value() = default;
  Value(Undefined u) : storage_(u) {}
  Value(bool b) : storage_(b) {}
  Value(int i) : storage_(std::int64_t{i}) {}
  Value(std::int64_t i) : storage_(i) {}
  Value(double d) : storage_(d) {}
  Value(std::string s) : storage_(std::move(s)) {}
  Value(const char* s) : storage_(std::string(s)) {}
  Value(std::string_view s) : storage_(std::string(s)) {}
  Value(VertexId v) : storage_(v) {}
  Value(EdgeId e) : storage_(e) {}
  Value(ElementRef ref);
  Value(Set s) : storage_(std::move(s)) {}
  Value(List l) : storage_(std::move(l)) {}
  Value(Tuple t) : storage_(std::move(t)) {}
  Value(Map m) : storage_(std::move(m)) {}

  ValueType type() const { return static_cast<ValueType>(storage_.index()); }
  const Storage& storage() const { return storage_; }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(storage_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(storage_);
  }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&storage_);
  }

  bool is_undefined() const { return is<Undefined>(); }
  bool is_element() const { return is<VertexId>() || is<EdgeId>(); }
  bool is_collection() const {
    return is<Set>() || is<List>() || is<Tuple>() || is<Map>();
  }
  // Set, List or Tuple items; empty span for anything else.
  std::span<const Value> items() const;
  std::optional<ElementRef> element() const;

  // Structural equality: type-strict, order-insensitive for Set and Map.
  friend bool operator==(const Value& a, const Value& b);

  std::size_t hash() const;

  // Order-faithful rendering: strings quoted, sets in insertion order.
  std::string to_string() const;

 private:
  Storage storage_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

struct SetData {
  std::vector<Value> items;
  std::unordered_map<Value, std::size_t, ValueHash> index;
};

struct MapData {
  std::vector<Map::Entry> entries;
  std::unordered_map<Value, std::size_t, ValueHash> index;
};

// Incremental construction of a Set preserving first-insertion order.
class SetBuilder {
 public:
  // Returns false when the value was already present.
  bool insert(Value v);
  std::size_t size() const { return data_.items.size(); }
  Set build() &&;

 private:
  SetData data_;
};

class MapBuilder {
 public:
  // Throws kDuplicateKey for a repeated key bound to a different value.
  void insert(Value key, Value value);
  std::size_t size() const { return data_.entries.size(); }
  Map build() &&;

 private:
  MapData data_;
};

// Double rendering that reads back as a double ("1.0", "2.5e-07").
std::string format_double(double d);
// Double-quoted with backslash escapes for quote, backslash, \n, \t, \r.
std::string quote(std::string_view s);

}  // namespace gretlite

template <>
struct std::hash<gretlite::Value> {
  std::size_t operator()(const gretlite::Value& v) const noexcept {
    return v.hash();
  }
};

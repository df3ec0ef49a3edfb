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

#include "gretlite/value.hpp"

#include <charconv>
#include <cmath>

#include "gretlite/error.hpp"

namespace gretlite {

namespace {

std::size_t mix(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::shared_ptr<const SetData>& empty_set_data() {
  static const auto data = std::make_shared<const SetData>();
  return data;
}

const std::shared_ptr<const MapData>& empty_map_data() {
  static const auto data = std::make_shared<const MapData>();
  return data;
}

void render_items(std::string& out, std::span<const Value> items) {
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    out += item.to_string();
  }
}

}  // namespace

std::string_view to_string(ValueType type) {
  switch (type) {
    case ValueType::kUndefined: return "Undefined";
    case ValueType::kBoolean: return "Boolean";
    case ValueType::kInteger: return "Integer";
    case ValueType::kDouble: return "Double";
    case ValueType::kString: return "String";
    case ValueType::kVertex: return "Vertex";
    case ValueType::kEdge: return "Edge";
    case ValueType::kSet: return "Set";
    case ValueType::kList: return "List";
    case ValueType::kTuple: return "Tuple";
    case ValueType::kMap: return "Map";
  }
  return "?";
}

Set::Set() : data_(empty_set_data()) {}

Set::Set(std::vector<Value> items) {
  SetBuilder builder;
  for (auto& v : items) builder.insert(std::move(v));
  *this = std::move(builder).build();
}

std::size_t Set::size() const { return data_->items.size(); }

bool Set::contains(const Value& v) const { return data_->index.contains(v); }

std::span<const Value> Set::items() const { return data_->items; }

bool operator==(const Set& a, const Set& b) {
  if (a.data_ == b.data_) return true;
  if (a.size() != b.size()) return false;
  for (const auto& v : a.items()) {
    if (!b.contains(v)) return false;
  }
  return true;
}

Map::Map() : data_(empty_map_data()) {}

Map::Map(std::vector<Entry> entries) {
  MapBuilder builder;
  for (auto& [k, v] : entries) builder.insert(std::move(k), std::move(v));
  *this = std::move(builder).build();
}

std::size_t Map::size() const { return data_->entries.size(); }

const Value* Map::find(const Value& key) const {
  auto it = data_->index.find(key);
  if (it == data_->index.end()) return nullptr;
  return &data_->entries[it->second].second;
}

std::span<const Map::Entry> Map::entries() const { return data_->entries; }

bool operator==(const Map& a, const Map& b) {
  if (a.data_ == b.data_) return true;
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a.entries()) {
    const Value* other = b.find(k);
    if (other == nullptr || !(*other == v)) return false;
  }
  return true;
}

bool SetBuilder::insert(Value v) {
  auto [it, inserted] = data_.index.try_emplace(v, data_.items.size());
  if (inserted) data_.items.push_back(std::move(v));
  return inserted;
}

Set SetBuilder::build() && {
  if (data_.items.empty()) return Set();
  return Set(std::make_shared<const SetData>(std::move(data_)));
}

void MapBuilder::insert(Value key, Value value) {
  auto [it, inserted] = data_.index.try_emplace(key, data_.entries.size());
  if (inserted) {
    data_.entries.emplace_back(std::move(key), std::move(value));
    return;
  }
  if (!(data_.entries[it->second].second == value)) {
    throw Error(ErrorCode::kDuplicateKey,
                "map key " + key.to_string() + " bound to both " +
                    data_.entries[it->second].second.to_string() + " and " +
                    value.to_string());
  }
}

Map MapBuilder::build() && {
  if (data_.entries.empty()) return Map();
  return Map(std::make_shared<const MapData>(std::move(data_)));
}

Value::Value(ElementRef ref) {
  if (const auto* v = std::get_if<VertexId>(&ref)) {
    storage_ = *v;
  } else {
    storage_ = std::get<EdgeId>(ref);
  }
}

std::span<const Value> Value::items() const {
  if (const auto* s = get_if<Set>()) return s->items();
  if (const auto* l = get_if<List>()) return l->items();
  if (const auto* t = get_if<Tuple>()) return t->items();
  return {};
}

std::optional<ElementRef> Value::element() const {
  if (const auto* v = get_if<VertexId>()) return ElementRef{*v};
  if (const auto* e = get_if<EdgeId>()) return ElementRef{*e};
  return std::nullopt;
}

bool operator==(const Value& a, const Value& b) {
  return a.storage_ == b.storage_;
}

std::size_t Value::hash() const {
  std::size_t seed = storage_.index();
  return std::visit(
      [seed](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return seed;
        } else if constexpr (std::is_same_v<T, Set>) {
          // Order-insensitive.
          std::size_t acc = 0;
          for (const auto& v : x.items()) acc += v.hash();
          return mix(seed, acc);
        } else if constexpr (std::is_same_v<T, Map>) {
          std::size_t acc = 0;
          for (const auto& [k, v] : x.entries()) acc += mix(k.hash(), v.hash());
          return mix(seed, acc);
        } else if constexpr (std::is_same_v<T, List> ||
                             std::is_same_v<T, Tuple>) {
          std::size_t acc = seed;
          for (const auto& v : x.items()) acc = mix(acc, v.hash());
          return acc;
        } else if constexpr (std::is_same_v<T, double>) {
          // +0.0 and -0.0 compare equal.
          return mix(seed, x == 0.0 ? 0 : std::hash<double>{}(x));
        } else {
          return mix(seed, std::hash<T>{}(x));
        }
      },
      storage_);
}

std::string Value::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return "undefined";
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return quote(x);
        } else if constexpr (std::is_same_v<T, VertexId>) {
          return "v" + std::to_string(x.value);
        } else if constexpr (std::is_same_v<T, EdgeId>) {
          return "e" + std::to_string(x.value);
        } else if constexpr (std::is_same_v<T, Set>) {
          std::string out = "{";
          render_items(out, x.items());
          return out + "}";
        } else if constexpr (std::is_same_v<T, List>) {
          std::string out = "[";
          render_items(out, x.items());
          return out + "]";
        } else if constexpr (std::is_same_v<T, Tuple>) {
          std::string out = "(";
          render_items(out, x.items());
          return out + ")";
        } else {
          std::string out = "{";
          bool first = true;
          for (const auto& [k, v] : x.entries()) {
            if (!first) out += ", ";
            first = false;
            out += k.to_string() + " -> " + v.to_string();
          }
          return out + "}";
        }
      },
      storage_);
}

std::string format_double(double d) {
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  std::string out(buf, end);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

}  // namespace gretlite

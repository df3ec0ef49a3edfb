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

#include <algorithm>
#include <string>

#include "gretlite/error.hpp"
#include "gretlite/greql/evaluator.hpp"

namespace gretlite::greql {

namespace {

using Args = std::span<const Value>;
using Types = std::span<const TypeRestriction>;

void expect_arity(std::string_view name, Args args, std::size_t n) {
  if (args.size() != n) {
    throw Error(ErrorCode::kArity, std::string(name) + " expects " +
                                       std::to_string(n) + " argument" +
                                       (n == 1 ? "" : "s") + ", got " +
                                       std::to_string(args.size()));
  }
}

void expect_no_types(std::string_view name, Types types) {
  if (!types.empty()) {
    throw Error(ErrorCode::kArity,
                std::string(name) + " takes no {type} arguments");
  }
}

[[noreturn]] void type_error(std::string_view name, const Value& v,
                             std::string_view wanted) {
  throw Error(ErrorCode::kTypeMismatch,
              std::string(name) + " expects " + std::string(wanted) + ", got " +
                  std::string(to_string(v.type())) + " " + v.to_string());
}

bool is_sequence(const Value& v) {
  return v.is<Set>() || v.is<List>() || v.is<Tuple>();
}

VertexId expect_vertex(std::string_view name, const Value& v) {
  if (const auto* id = v.get_if<VertexId>()) return *id;
  type_error(name, v, "a vertex");
}

EdgeId expect_edge(std::string_view name, const Value& v) {
  if (const auto* id = v.get_if<EdgeId>()) return *id;
  type_error(name, v, "an edge");
}

std::vector<std::string> names_of(Types types) {
  std::vector<std::string> names;
  for (const auto& t : types) {
    if (t.exact) {
      throw Error(ErrorCode::kTypeMismatch,
                  "exact restriction '" + t.name + "!' is not supported here");
    }
    names.push_back(t.name);
  }
  return names;
}

void flatten_into(const Value& v, SetBuilder& out) {
  if (is_sequence(v)) {
    for (const auto& item : v.items()) flatten_into(item, out);
  } else {
    out.insert(v);
  }
}

void flatten_into(const Value& v, std::vector<Value>& out) {
  if (is_sequence(v)) {
    for (const auto& item : v.items()) flatten_into(item, out);
  } else {
    out.push_back(v);
  }
}

bool has_type(const Graph& graph, const ElementRef& ref,
              const TypeRestriction& t) {
  if (t.exact) {
    if (!graph.schema().kind_of(t.name)) {
      throw Error(ErrorCode::kUnknownClass, "unknown class '" + t.name + "'");
    }
    return graph.class_of(ref).name == t.name;
  }
  return graph.is_instance_of(ref, t.name);
}

Value edge_set(const Graph& graph, std::string_view name, Types types,
               Args args, Direction dir) {
  expect_arity(name, args, 1);
  VertexId v = expect_vertex(name, args[0]);
  auto names = names_of(types);
  EdgeClassFilter filter(graph.schema(), names);
  SetBuilder out;
  for (EdgeId e : graph.incident(v, dir, filter)) out.insert(Value(e));
  return std::move(out).build();
}

}  // namespace

Value call_builtin(const Graph& graph, std::string_view name, Types types,
                   Args args) {
  if (name == "count") {
    expect_no_types(name, types);
    expect_arity(name, args, 1);
    if (is_sequence(args[0])) {
      return Value(static_cast<std::int64_t>(args[0].items().size()));
    }
    if (const auto* m = args[0].get_if<Map>()) {
      return Value(static_cast<std::int64_t>(m->size()));
    }
    type_error(name, args[0], "a collection");
  }
  if (name == "theElement") {
    expect_no_types(name, types);
    expect_arity(name, args, 1);
    if (!is_sequence(args[0])) type_error(name, args[0], "a collection");
    auto items = args[0].items();
    if (items.size() != 1) {
      throw Error(ErrorCode::kCardinality,
                  "theElement expects exactly one element, got " +
                      std::to_string(items.size()) + " in " +
                      args[0].to_string());
    }
    return items[0];
  }
  if (name == "contains") {
    expect_no_types(name, types);
    expect_arity(name, args, 2);
    if (const auto* s = args[0].get_if<Set>()) return Value(s->contains(args[1]));
    if (const auto* m = args[0].get_if<Map>()) {
      return Value(m->find(args[1]) != nullptr);
    }
    if (is_sequence(args[0])) {
      auto items = args[0].items();
      return Value(std::find(items.begin(), items.end(), args[1]) != items.end());
    }
    type_error(name, args[0], "a collection");
  }
  if (name == "isEmpty") {
    expect_no_types(name, types);
    expect_arity(name, args, 1);
    if (is_sequence(args[0])) return Value(args[0].items().empty());
    if (const auto* m = args[0].get_if<Map>()) return Value(m->empty());
    type_error(name, args[0], "a collection");
  }
  if (name == "degree") {
    expect_arity(name, args, 1);
    VertexId v = expect_vertex(name, args[0]);
    auto names = names_of(types);
    EdgeClassFilter filter(graph.schema(), names);
    return Value(static_cast<std::int64_t>(
        graph.incident(v, Direction::kBoth, filter).size()));
  }
  if (name == "hasType") {
    if (!types.empty()) {
      expect_arity(name, args, 1);
      auto ref = args[0].element();
      if (!ref) type_error(name, args[0], "an element");
      for (const auto& t : types) {
        if (has_type(graph, *ref, t)) return Value(true);
      }
      return Value(false);
    }
    expect_arity(name, args, 2);
    auto ref = args[0].element();
    if (!ref) type_error(name, args[0], "an element");
    const auto* cls = args[1].get_if<std::string>();
    if (cls == nullptr) type_error(name, args[1], "a class name string");
    return Value(graph.is_instance_of(*ref, *cls));
  }
  if (name == "keySet") {
    expect_no_types(name, types);
    expect_arity(name, args, 1);
    const auto* m = args[0].get_if<Map>();
    if (m == nullptr) type_error(name, args[0], "a map");
    SetBuilder out;
    for (const auto& [k, v] : m->entries()) out.insert(k);
    return std::move(out).build();
  }
  if (name == "flatten") {
    expect_no_types(name, types);
    expect_arity(name, args, 1);
    if (args[0].is<Set>()) {
      SetBuilder out;
      flatten_into(args[0], out);
      return std::move(out).build();
    }
    if (is_sequence(args[0])) {
      std::vector<Value> out;
      flatten_into(args[0], out);
      return Value(List(std::move(out)));
    }
    type_error(name, args[0], "a collection");
  }
  if (name == "startVertex" || name == "endVertex") {
    expect_no_types(name, types);
    expect_arity(name, args, 1);
    EdgeId e = expect_edge(name, args[0]);
    return Value(name == "startVertex" ? graph.start_of(e) : graph.end_of(e));
  }
  if (name == "edgesFrom") return edge_set(graph, name, types, args, Direction::kOut);
  if (name == "edgesTo") return edge_set(graph, name, types, args, Direction::kIn);
  if (name == "edgesConnected") {
    return edge_set(graph, name, types, args, Direction::kBoth);
  }
  if (name == "set") {
    expect_no_types(name, types);
    return Value(Set(std::vector<Value>(args.begin(), args.end())));
  }
  if (name == "list") {
    expect_no_types(name, types);
    return Value(List(std::vector<Value>(args.begin(), args.end())));
  }
  if (name == "tup") {
    expect_no_types(name, types);
    return Value(Tuple(std::vector<Value>(args.begin(), args.end())));
  }
  throw Error(ErrorCode::kUnboundVariable,
              "unknown function '" + std::string(name) + "'");
}

}  // namespace gretlite::greql

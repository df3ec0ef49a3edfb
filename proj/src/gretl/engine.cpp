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

#include "gretlite/gretl/engine.hpp"

#include <algorithm>
#include <unordered_set>

#include "gretlite/error.hpp"
#include "gretlite/gretl/parser.hpp"

namespace gretlite::gretl {

namespace {

[[noreturn]] void type_error(const std::string& what, const Value& v) {
  throw Error(ErrorCode::kTypeMismatch,
              what + ", got " + std::string(to_string(v.type())) + " " +
                  v.to_string());
}

void collect_elements(const Value& v, std::vector<ElementRef>& out,
                      bool strict) {
  if (v.is<Set>() || v.is<List>() || v.is<Tuple>()) {
    for (const auto& item : v.items()) collect_elements(item, out, strict);
    return;
  }
  if (auto ref = v.element()) {
    if (std::find(out.begin(), out.end(), *ref) == out.end()) {
      out.push_back(*ref);
    }
    return;
  }
  if (strict) type_error("expected graph elements", v);
}

using AttributeValues = std::vector<std::pair<const std::string*, Value>>;

struct PlannedTemplate {
  // Per template vertex: archetype (NEW) or the referenced vertex (REF).
  std::vector<Value> archetypes;
  std::vector<std::optional<VertexId>> refs;
  std::vector<AttributeValues> vertex_attrs;
  std::vector<std::optional<Value>> edge_archetypes;
  std::vector<AttributeValues> edge_attrs;
};

std::string vertex_label(VertexId v) { return "v" + std::to_string(v.value); }

}  // namespace

ExecutionContext::ExecutionContext(const Graph* source,
                                   std::shared_ptr<const Schema> target_schema,
                                   std::string target_name)
    : in_place_(false),
      source_(source),
      target_(std::move(target_schema), std::move(target_name)) {
  if (source_ == nullptr) {
    empty_source_ =
        std::make_unique<Graph>(std::make_shared<const Schema>("empty"));
    source_ = empty_source_.get();
  }
}

ExecutionContext::ExecutionContext(Graph graph)
    : in_place_(true), target_(std::move(graph)) {}

greql::Bindings ExecutionContext::bindings(std::optional<Value> dollar) const {
  greql::Bindings b;
  b.variables = variables_;
  b.dollar = std::move(dollar);
  b.resolver = [this](std::string_view name) -> std::optional<Value> {
    const Schema& schema = target_.schema();
    auto lookup = [&](std::string_view cls, bool images) -> std::optional<Value> {
      if (!schema.kind_of(cls)) {
        throw Error(ErrorCode::kUnknownClass,
                    "'" + std::string(name) + "' names unknown target class '" +
                        std::string(cls) + "'");
      }
      return images ? Value(trace_.img_map(schema, cls))
                    : Value(trace_.arch_map(schema, cls));
    };
    if (name.starts_with("img_")) return lookup(name.substr(4), true);
    if (name.starts_with("arch_")) return lookup(name.substr(5), false);
    return std::nullopt;
  };
  return b;
}

Value ExecutionContext::eval(const greql::Expr& expr,
                             std::optional<Value> dollar) const {
  return greql::evaluate(expr, query_graph(), bindings(std::move(dollar)));
}

void ExecutionContext::require_in_place(std::string_view op) const {
  if (!in_place_) {
    throw Error(ErrorCode::kNotInPlace,
                std::string(op) + " is an in-place operation; run with in-place "
                                  "execution");
  }
}

void ExecutionContext::erase(const ElementRef& ref,
                             std::vector<ElementRef>* removed) {
  if (const auto* v = std::get_if<VertexId>(&ref)) {
    DeletedElements d = target_.delete_vertex(*v);
    for (EdgeId e : d.edges) {
      trace_.forget(e);
      if (removed) removed->push_back(e);
    }
    trace_.forget(*v);
    if (removed) removed->push_back(*v);
  } else {
    target_.delete_edge(std::get<EdgeId>(ref));
    trace_.forget(ref);
    if (removed) removed->push_back(ref);
  }
}

std::size_t ExecutionContext::create_vertices(std::string_view class_name,
                                              const greql::Query& query) {
  Value result = eval(query);
  const Set* members = result.get_if<Set>();
  if (members == nullptr) type_error("CreateVertices expects a set", result);
  const Schema& schema = target_.schema();
  if (schema.find_vertex_class(class_name) == nullptr) {
    throw Error(ErrorCode::kUnknownClass,
                "unknown vertex class '" + std::string(class_name) + "'");
  }
  for (const auto& member : members->items()) {
    trace_.check_available(schema, class_name, member);
    VertexId v = target_.create_vertex(class_name);
    trace_.add(schema, class_name, member, v);
  }
  return members->size();
}

std::size_t ExecutionContext::create_edges(std::string_view class_name,
                                           const greql::Query& query) {
  Value result = eval(query);
  const Set* members = result.get_if<Set>();
  if (members == nullptr) type_error("CreateEdges expects a set of triples", result);
  const Schema& schema = target_.schema();
  const EdgeClass* cls = schema.find_edge_class(class_name);
  if (cls == nullptr) {
    throw Error(ErrorCode::kUnknownClass,
                "unknown edge class '" + std::string(class_name) + "'");
  }
  auto endpoint = [&](const Value& arch, const std::string& vertex_class,
                      std::string_view role) {
    auto img = trace_.image(schema, vertex_class, arch);
    if (!img || !std::holds_alternative<VertexId>(*img)) {
      throw Error(ErrorCode::kUnresolvableArchetype,
                  std::string(role) + " archetype " + arch.to_string() +
                      " has no image in img_" + vertex_class);
    }
    return std::get<VertexId>(*img);
  };
  for (const auto& member : members->items()) {
    const Tuple* triple = member.get_if<Tuple>();
    if (triple == nullptr || triple->size() != 3) {
      type_error("CreateEdges expects (edge archetype, start archetype, end "
                 "archetype) triples",
                 member);
    }
    VertexId start = endpoint((*triple)[1], cls->from_class, "start");
    VertexId end = endpoint((*triple)[2], cls->to_class, "end");
    trace_.check_available(schema, class_name, (*triple)[0]);
    EdgeId e = target_.create_edge(class_name, start, end);
    trace_.add(schema, class_name, (*triple)[0], e);
  }
  return members->size();
}

std::size_t ExecutionContext::set_attributes(std::string_view class_name,
                                             std::string_view attribute,
                                             const greql::Query& query) {
  Value result = eval(query);
  const Map* assignments = result.get_if<Map>();
  if (assignments == nullptr) {
    type_error("SetAttributes expects a map from archetypes to values", result);
  }
  const Schema& schema = target_.schema();
  const ClassBase* cls = schema.find_vertex_class(class_name);
  if (cls == nullptr) cls = schema.find_edge_class(class_name);
  if (cls == nullptr) {
    throw Error(ErrorCode::kUnknownClass,
                "unknown class '" + std::string(class_name) + "'");
  }
  if (!cls->attribute_index(attribute)) {
    throw Error(ErrorCode::kUndeclaredAttribute,
                "class '" + cls->name + "' has no attribute '" +
                    std::string(attribute) + "'");
  }
  for (const auto& [arch, value] : assignments->entries()) {
    auto img = trace_.image(schema, class_name, arch);
    if (!img) {
      throw Error(ErrorCode::kUnresolvableArchetype,
                  "archetype " + arch.to_string() + " has no image in img_" +
                      cls->name);
    }
    target_.set_attribute(*img, attribute, value);
  }
  return assignments->size();
}

namespace {

AttributeValues eval_assignments(
    const std::vector<AttributeAssignment>& assigns,
    const std::function<Value(const greql::Expr&)>& eval) {
  AttributeValues out;
  for (const auto& a : assigns) out.emplace_back(&a.name, eval(*a.value));
  return out;
}

}  // namespace

std::size_t ExecutionContext::create_subgraph(const Template& pattern,
                                              const greql::Query& query) {
  validate_template(pattern, false);
  Value result = eval(query);
  const Set* members = result.get_if<Set>();
  if (members == nullptr) type_error("CreateSubgraph expects a set", result);
  const Schema& schema = target_.schema();
  for (const auto& member : members->items()) {
    auto e = [&](const greql::Expr& expr) { return eval(expr, member); };
    std::vector<Value> archetypes;
    std::vector<AttributeValues> vertex_attrs;
    for (const auto& v : pattern.vertices) {
      archetypes.push_back(e(*v.expr));
      vertex_attrs.push_back(eval_assignments(v.attributes, e));
    }
    std::vector<std::optional<Value>> edge_archetypes;
    std::vector<AttributeValues> edge_attrs;
    for (const auto& te : pattern.edges) {
      edge_archetypes.push_back(te.archetype ? std::optional(e(*te.archetype))
                                             : std::nullopt);
      edge_attrs.push_back(eval_assignments(te.attributes, e));
    }

    std::vector<VertexId> created;
    for (std::size_t i = 0; i < pattern.vertices.size(); ++i) {
      const auto& cls = pattern.vertices[i].class_name;
      trace_.check_available(schema, cls, archetypes[i]);
      VertexId v = target_.create_vertex(cls);
      trace_.add(schema, cls, archetypes[i], v);
      for (const auto& [name, value] : vertex_attrs[i]) {
        target_.set_attribute(v, *name, value);
      }
      created.push_back(v);
    }
    for (std::size_t i = 0; i < pattern.edges.size(); ++i) {
      const auto& te = pattern.edges[i];
      if (edge_archetypes[i]) {
        trace_.check_available(schema, te.class_name, *edge_archetypes[i]);
      }
      EdgeId id = target_.create_edge(te.class_name, created[te.start],
                                      created[te.end]);
      if (edge_archetypes[i]) {
        trace_.add(schema, te.class_name, *edge_archetypes[i], id);
      }
      for (const auto& [name, value] : edge_attrs[i]) {
        target_.set_attribute(id, *name, value);
      }
    }
  }
  return members->size();
}

MatchReplaceStats ExecutionContext::match_replace(const Template& pattern,
                                                  const greql::Query& query) {
  require_in_place("MatchReplace");
  validate_template(pattern, true);
  Value result = eval(query);
  if (!(result.is<Set>() || result.is<List>())) {
    type_error("MatchReplace expects a set of matches", result);
  }
  const Schema& schema = target_.schema();
  MatchReplaceStats stats;
  std::unordered_set<ElementRef> touched;

  auto matches = result.items();
  for (std::size_t index = 0; index < matches.size(); ++index) {
    const Value& match = matches[index];
    std::vector<ElementRef> elements;
    collect_elements(match, elements, false);
    bool stale = std::any_of(elements.begin(), elements.end(), [&](const auto& r) {
      return touched.contains(r) || !target_.is_live(r);
    });
    if (stale) {
      ++stats.skipped;
      continue;
    }

    // Everything the template needs is evaluated against the match as found.
    auto e = [&](const greql::Expr& expr) { return eval(expr, match); };
    std::vector<std::optional<VertexId>> refs;
    std::vector<Value> archetypes;
    std::vector<AttributeValues> vertex_attrs;
    std::unordered_set<ElementRef> preserved;
    for (const auto& v : pattern.vertices) {
      Value x = e(*v.expr);
      if (v.kind == TemplateVertex::Kind::kRef) {
        const auto* id = x.get_if<VertexId>();
        if (id == nullptr) {
          type_error("template vertex '" + v.alias +
                         "' must reference a vertex of the match",
                     x);
        }
        refs.push_back(*id);
        archetypes.emplace_back();
        preserved.insert(*id);
      } else {
        refs.push_back(std::nullopt);
        archetypes.push_back(std::move(x));
      }
      vertex_attrs.push_back(eval_assignments(v.attributes, e));
    }
    std::vector<std::optional<Value>> edge_archetypes;
    std::vector<AttributeValues> edge_attrs;
    for (const auto& te : pattern.edges) {
      edge_archetypes.push_back(te.archetype ? std::optional(e(*te.archetype))
                                             : std::nullopt);
      edge_attrs.push_back(eval_assignments(te.attributes, e));
    }

    std::vector<ElementRef> removed;
    for (int pass = 0; pass < 2; ++pass) {
      ElementKind kind = pass == 0 ? ElementKind::kEdge : ElementKind::kVertex;
      for (const auto& ref : elements) {
        if (kind_of(ref) != kind || preserved.contains(ref)) continue;
        if (target_.is_live(ref)) erase(ref, &removed);
      }
    }
    touched.insert(elements.begin(), elements.end());
    touched.insert(removed.begin(), removed.end());

    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < pattern.vertices.size(); ++i) {
      const auto& tv = pattern.vertices[i];
      VertexId id;
      if (refs[i]) {
        id = *refs[i];
        if (!target_.is_live(id)) {
          throw Error(ErrorCode::kDeadElement,
                      "template vertex '" + tv.alias + "' resolves to deleted " +
                          vertex_label(id));
        }
      } else {
        trace_.check_available(schema, tv.class_name, archetypes[i]);
        id = target_.create_vertex(tv.class_name);
        trace_.add(schema, tv.class_name, archetypes[i], id);
      }
      for (const auto& [name, value] : vertex_attrs[i]) {
        target_.set_attribute(id, *name, value);
      }
      ids.push_back(id);
    }
    for (std::size_t i = 0; i < pattern.edges.size(); ++i) {
      const auto& te = pattern.edges[i];
      if (edge_archetypes[i]) {
        trace_.check_available(schema, te.class_name, *edge_archetypes[i]);
      }
      EdgeId id = target_.create_edge(te.class_name, ids[te.start], ids[te.end]);
      if (edge_archetypes[i]) {
        trace_.add(schema, te.class_name, *edge_archetypes[i], id);
      }
      for (const auto& [name, value] : edge_attrs[i]) {
        target_.set_attribute(id, *name, value);
      }
    }
    ++stats.applied;
    stats.applied_matches.push_back(index);
  }
  return stats;
}

std::size_t ExecutionContext::remove(const greql::Query& query) {
  require_in_place("Delete");
  Value result = eval(query);
  if (result.is<Map>()) type_error("Delete expects graph elements", result);
  std::vector<ElementRef> elements;
  collect_elements(result, elements, true);
  std::vector<ElementRef> removed;
  for (int pass = 0; pass < 2; ++pass) {
    ElementKind kind = pass == 0 ? ElementKind::kEdge : ElementKind::kVertex;
    for (const auto& ref : elements) {
      if (kind_of(ref) == kind && target_.is_live(ref)) erase(ref, &removed);
    }
  }
  return removed.size();
}

std::size_t ExecutionContext::iteratively(std::span<const Statement> body) {
  require_in_place("Iteratively");
  for (std::size_t round = 1;; ++round) {
    if (round > round_limit) {
      throw Error(ErrorCode::kRoundLimit,
                  "Iteratively still changing the graph after " +
                      std::to_string(round_limit) + " rounds");
    }
    bool changed = false;
    for (std::size_t i = 0; i < body.size(); ++i) {
      std::uint64_t before = target_.version();
      try {
        run(body[i]);
      } catch (const Error& e) {
        throw Error(e.code(), "operation " + std::to_string(i + 1) + " (" +
                                  std::string(op_name(body[i])) + "): " +
                                  e.what());
      }
      if (target_.version() != before) changed = true;
    }
    if (!changed) return round;
  }
}

void ExecutionContext::assign(const std::string& name,
                              const greql::Query& query) {
  variables_[name] = eval(query);
}

void ExecutionContext::run(const Statement& statement) {
  std::visit(
      [this](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, CreateVertices>) {
          create_vertices(op.class_name, op.query);
        } else if constexpr (std::is_same_v<T, CreateEdges>) {
          create_edges(op.class_name, op.query);
        } else if constexpr (std::is_same_v<T, SetAttributes>) {
          set_attributes(op.class_name, op.attribute, op.query);
        } else if constexpr (std::is_same_v<T, CreateSubgraph>) {
          create_subgraph(op.pattern, op.query);
        } else if constexpr (std::is_same_v<T, MatchReplace>) {
          match_replace(op.pattern, op.query);
        } else if constexpr (std::is_same_v<T, Delete>) {
          remove(op.query);
        } else if constexpr (std::is_same_v<T, Assign>) {
          assign(op.name, op.query);
        } else {
          iteratively(op.body);
        }
      },
      statement.op);
}

void ExecutionContext::run(std::span<const Statement> statements) {
  for (std::size_t i = 0; i < statements.size(); ++i) {
    try {
      run(statements[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "operation " + std::to_string(i + 1) + " (" +
                                std::string(op_name(statements[i])) + "): " +
                                e.what());
    }
  }
}

ExecutionResult execute(const Transformation& transformation,
                        const Graph* source,
                        std::shared_ptr<const Schema> target_schema,
                        bool in_place, const ExecuteOptions& options) {
  if (in_place) {
    if (source == nullptr) {
      throw Error(ErrorCode::kNotInPlace,
                  "in-place execution needs a source graph");
    }
    if (target_schema && target_schema.get() != &source->schema() &&
        target_schema->name() != source->schema().name()) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "in-place target schema '" + target_schema->name() +
                      "' differs from the source schema '" +
                      source->schema().name() + "'");
    }
    ExecutionContext ctx{Graph(*source)};
    ctx.round_limit = options.round_limit;
    ctx.run(transformation.statements);
    TraceabilityMap trace = ctx.trace();
    return {std::move(ctx).release_target(), std::move(trace)};
  }
  if (!target_schema) {
    throw Error(ErrorCode::kSchemaMismatch,
                "out-place execution needs a target schema");
  }
  ExecutionContext ctx(source, std::move(target_schema), transformation.name);
  ctx.round_limit = options.round_limit;
  ctx.run(transformation.statements);
  TraceabilityMap trace = ctx.trace();
  return {std::move(ctx).release_target(), std::move(trace)};
}

}  // namespace gretlite::gretl

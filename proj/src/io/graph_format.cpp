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

#include "gretlite/io/graph_format.hpp"

#include <unordered_map>

#include "gretlite/error.hpp"
#include "gretlite/lexer.hpp"

namespace gretlite::io {

namespace {

[[noreturn]] void rethrow_at(const Error& e, SourcePos pos) {
  if (e.pos()) throw e;
  throw Error(e.code(), e.what(), pos);
}

Value literal(TokenStream& ts) {
  bool negative = ts.accept_punct("-");
  const Token& tok = ts.next();
  switch (tok.kind) {
    case TokenKind::kInteger:
      return Value(negative ? -tok.integer : tok.integer);
    case TokenKind::kDouble:
      return Value(negative ? -tok.real : tok.real);
    case TokenKind::kString:
      if (!negative) return Value(tok.text);
      break;
    case TokenKind::kIdent:
      if (!negative && (tok.text == "true" || tok.text == "false")) {
        return Value(tok.text == "true");
      }
      break;
    default:
      break;
  }
  ts.fail_at(tok, "expected a literal, found " + describe(tok));
}

void attribute_block(TokenStream& ts, Graph& graph, const ElementRef& ref) {
  if (!ts.accept_punct("{")) return;
  if (ts.accept_punct("}")) return;
  do {
    const Token& name = ts.expect_ident("attribute name");
    ts.expect_punct("=");
    SourcePos pos = ts.peek().pos;
    Value v = literal(ts);
    try {
      graph.set_attribute(ref, name.text, v);
    } catch (const Error& e) {
      rethrow_at(e, pos);
    }
  } while (ts.accept_punct(","));
  ts.expect_punct("}");
}

void write_attributes(std::string& out, const Graph& graph,
                      const ElementRef& ref) {
  const ClassBase& cls = graph.class_of(ref);
  if (cls.attributes.empty()) return;
  auto values = graph.attributes(ref);
  out += " {";
  for (std::size_t i = 0; i < cls.attributes.size(); ++i) {
    out += i ? ", " : " ";
    out += cls.attributes[i].name + " = " + values[i].to_string();
  }
  out += " }";
}

}  // namespace

Graph load_graph(std::string_view text, std::shared_ptr<const Schema> schema) {
  TokenStream ts(tokenize(text));
  ts.expect_keyword("graph");
  std::string name = ts.expect_ident("graph name").text;
  ts.expect_keyword("conforms");
  const Token& schema_name = ts.expect_ident("schema name");
  if (schema_name.text != schema->name()) {
    throw Error(ErrorCode::kSchemaMismatch,
                "graph conforms to schema '" + schema_name.text +
                    "' but schema '" + schema->name() + "' was supplied",
                schema_name.pos);
  }
  ts.expect_punct(";");

  Graph graph(schema, name);
  std::unordered_map<std::string, VertexId> vertices;
  std::unordered_map<std::string, EdgeId> edges;
  while (!ts.at_end()) {
    const Token& id = ts.expect_ident("element id");
    if (vertices.contains(id.text) || edges.contains(id.text)) {
      throw Error(ErrorCode::kDuplicateId,
                  "element id '" + id.text + "' is defined twice", id.pos);
    }
    ts.expect_punct(":");
    const Token& cls = ts.expect_ident("class name");
    auto kind = schema->kind_of(cls.text);
    if (!kind) {
      throw Error(ErrorCode::kUnknownClass,
                  "unknown class '" + cls.text + "'", cls.pos);
    }
    ElementRef ref;
    if (*kind == ElementKind::kVertex) {
      try {
        ref = graph.create_vertex(cls.text);
      } catch (const Error& e) {
        rethrow_at(e, cls.pos);
      }
      vertices.emplace(id.text, std::get<VertexId>(ref));
    } else {
      auto endpoint = [&]() {
        const Token& tok = ts.expect_ident("endpoint id");
        auto it = vertices.find(tok.text);
        if (it == vertices.end()) {
          throw Error(ErrorCode::kDanglingEndpoint,
                      "edge '" + id.text + "' refers to undeclared vertex '" +
                          tok.text + "'",
                      tok.pos);
        }
        return it->second;
      };
      VertexId start = endpoint();
      ts.expect_punct("->");
      VertexId end = endpoint();
      try {
        ref = graph.create_edge(cls.text, start, end);
      } catch (const Error& e) {
        rethrow_at(e, cls.pos);
      }
      edges.emplace(id.text, std::get<EdgeId>(ref));
    }
    attribute_block(ts, graph, ref);
    ts.expect_punct(";");
  }
  return graph;
}

std::string save_graph(const Graph& graph) {
  std::string out =
      "graph " + graph.name() + " conforms " + graph.schema().name() + ";\n";
  std::unordered_map<std::uint32_t, std::size_t> rank;
  std::size_t n = 0;
  for (VertexId v : graph.vertices()) {
    rank.emplace(v.value, ++n);
    out += "v" + std::to_string(n) + " : " + graph.class_of(v).name;
    write_attributes(out, graph, v);
    out += ";\n";
  }
  std::size_t m = 0;
  for (EdgeId e : graph.edges()) {
    out += "e" + std::to_string(++m) + " : " + graph.class_of(e).name + " v" +
           std::to_string(rank.at(graph.start_of(e).value)) + " -> v" +
           std::to_string(rank.at(graph.end_of(e).value));
    write_attributes(out, graph, e);
    out += ";\n";
  }
  return out;
}

std::string saved_label(const Graph& graph, const ElementRef& ref) {
  std::size_t n = 0;
  if (const auto* v = std::get_if<VertexId>(&ref)) {
    for (VertexId x : graph.vertices()) {
      ++n;
      if (x == *v) return "v" + std::to_string(n);
    }
  } else {
    EdgeId e = std::get<EdgeId>(ref);
    for (EdgeId x : graph.edges()) {
      ++n;
      if (x == e) return "e" + std::to_string(n);
    }
  }
  throw Error(ErrorCode::kDeadElement, "element is not part of the graph");
}

}  // namespace gretlite::io

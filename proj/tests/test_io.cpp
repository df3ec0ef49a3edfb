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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "gretlite/canonical.hpp"
#include "gretlite/error.hpp"
#include "gretlite/gretl/engine.hpp"
#include "gretlite/io/dot.hpp"
#include "gretlite/io/graph_format.hpp"
#include "gretlite/io/schema_format.hpp"
#include "gretlite/oracles.hpp"
#include "support.hpp"

using namespace gretlite;
using gretlite::testing::corpus_schema;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorCode::kIo, "unreachable");
}

std::size_t count_lines(const std::string& text, std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("schemas survive save and load") {
  for (const char* name : {"hello_world", "hello_world_extended", "graph1", "graph2", "graph3"}) {
    auto schema = corpus_schema(name);
    std::string saved = io::save_schema(*schema);
    auto again = io::load_schema(saved);
    CHECK(io::save_schema(*again) == saved);
    CHECK(again->name() == schema->name());
  }
}

TEST_CASE("schema declarations may come in any order") {
  auto s = io::load_schema(R"(schema S;
    edgeclass L from B to A;
    vertexclass B : A { n: Integer };
    abstract vertexclass A { s: String, d: Double, b: Boolean };
  )");
  const auto* b = s->find_vertex_class("B");
  REQUIRE(b != nullptr);
  CHECK(b->attributes.size() == 4);
  CHECK(s->find_vertex_class("A")->is_abstract);
  CHECK(s->find_edge_class("L") != nullptr);
}

TEST_CASE("schema errors") {
  Error cycle = error_of([] { io::load_schema("schema S;\nvertexclass A : A;"); });
  CHECK(cycle.code() == ErrorCode::kInheritanceCycle);
  REQUIRE(cycle.pos());
  CHECK(cycle.pos()->line == 2);
  CHECK(error_of([] { io::load_schema("schema S; vertexclass A : B; vertexclass B : A;"); })
            .code() == ErrorCode::kInheritanceCycle);
  CHECK(error_of([] { io::load_schema("schema S; vertexclass A : Nope;"); }).code() ==
        ErrorCode::kUnknownSupertype);
  CHECK(error_of([] { io::load_schema("schema S; vertexclass A; vertexclass A;"); }).code() ==
        ErrorCode::kDuplicateName);
  CHECK(error_of([] { io::load_schema("schema S; vertexclass A { x: Blob };"); }).code() ==
        ErrorCode::kSyntax);
  CHECK(error_of([] { io::load_schema("schema S; edgeclass L from A to A;"); }).code() ==
        ErrorCode::kUnknownClass);
}

TEST_CASE("graph loading") {
  auto schema = corpus_schema("graph1");
  Graph empty = io::load_graph("graph g conforms Graph1;", schema);
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  Graph g = io::load_graph(R"(graph g conforms Graph1;
    r : Graph_;
    a : Node { name = "a" };
    b : Node;
    x : Edge_;
    s : Edge_LinksToSrc x -> a;
    t : Edge_LinksToTrg x -> b;
  )", schema);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.get_attribute(g.vertices()[2], "name") == Value(""));
  CHECK(g.name() == "g");
}

TEST_CASE("graph loading errors") {
  auto schema = corpus_schema("graph1");
  Error dangling = error_of([&] {
    io::load_graph("graph g conforms Graph1;\nx : Edge_;\ns : Edge_LinksToSrc x -> v9;", schema);
  });
  CHECK(dangling.code() == ErrorCode::kDanglingEndpoint);
  CHECK(std::string(dangling.what()).find("v9") != std::string::npos);
  REQUIRE(dangling.pos());
  CHECK(dangling.pos()->line == 3);
  CHECK(error_of([&] { io::load_graph("graph g conforms Other;", schema); }).code() ==
        ErrorCode::kSchemaMismatch);
  CHECK(error_of([&] {
    io::load_graph("graph g conforms Graph1; a : Node; a : Node;", schema);
  }).code() == ErrorCode::kDuplicateId);
  CHECK(error_of([&] {
    io::load_graph("graph g conforms Graph1; a : Node { name = 3 };", schema);
  }).code() == ErrorCode::kTypeMismatch);
  CHECK(error_of([&] {
    io::load_graph("graph g conforms Graph1; a : Node { size = 3 };", schema);
  }).code() == ErrorCode::kUndeclaredAttribute);
  CHECK(error_of([&] {
    io::load_graph("graph g conforms Graph1; a : Node; b : Node; l : Edge_LinksToSrc a -> b;",
                   schema);
  }).code() == ErrorCode::kEndpointType);
  CHECK(error_of([&] { io::load_graph("graph g conforms Graph1; a : Nope;", schema); }).code() ==
        ErrorCode::kUnknownClass);
}

TEST_CASE("graphs survive save and load") {
  CHECK(!testing::check_round_trip(testing::corpus_graph("graphs/graph1_example.glg", "graph1")));
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    CHECK(!testing::check_round_trip(oracles::random_graph1(corpus_schema("graph1"), rng)));
  }
  auto schema = io::load_schema(
      "schema S; vertexclass T { s: String, i: Integer, d: Double, b: Boolean };");
  Graph g(schema);
  VertexId v = g.create_vertex("T");
  g.set_attribute(v, "s", Value("quote \" and \\ and\nnewline"));
  g.set_attribute(v, "i", Value(-42));
  g.set_attribute(v, "d", Value(-0.125));
  g.set_attribute(v, "b", Value(true));
  CHECK(!testing::check_round_trip(g));
}

TEST_CASE("saving renumbers after deletions") {
  Graph g = testing::corpus_graph("graphs/graph1_example.glg", "graph1");
  g.delete_vertex(g.vertices()[1]);
  std::string saved = io::save_graph(g);
  CHECK(saved.find("v1 : Graph_;") != std::string::npos);
  CHECK(saved.find("v2 : Node { name = \"n2\" };") != std::string::npos);
  CHECK(!testing::check_round_trip(g));
}

TEST_CASE("dot export") {
  auto schema = corpus_schema("graph1");
  Graph empty(schema);
  CHECK(io::export_dot(empty) == "digraph G {\n}\n");

  Graph one(schema);
  VertexId n = one.create_vertex("Node");
  one.set_attribute(n, "name", Value("n1"));
  CHECK(io::export_dot(one) ==
        "digraph G {\n  v1 [shape=box, label=\"Node\\nv1\\nname = \\\"n1\\\"\"];\n}\n");

  auto r = gretl::execute(testing::corpus_script("scripts/02-hello-world-extended.grt"),
                          nullptr, corpus_schema("hello_world_extended"), false);
  std::string dot = io::export_dot(r.graph);
  CHECK(count_lines(dot, "[shape=box") == 3);
  CHECK(count_lines(dot, " -> ") == 2);
  CHECK(dot.find("label=\"GreetingContainsPerson\"") != std::string::npos);
}

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

#include "gretlite/error.hpp"
#include "gretlite/greql/evaluator.hpp"
#include "gretlite/greql/parser.hpp"
#include "gretlite/io/graph_format.hpp"
#include "gretlite/oracles.hpp"
#include "support.hpp"

using namespace gretlite;
using gretlite::testing::corpus_graph;
using gretlite::testing::corpus_schema;
using gretlite::testing::query;

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

Graph three_nodes() {
  return io::load_graph(R"(graph g conforms Graph1;
    r : Graph_;
    n1 : Node { name = "n1" };
    n2 : Node { name = "n2" };
    n3 : Node { name = "n3" };
    x : Edge_;
    s : Edge_LinksToSrc x -> n1;
    t : Edge_LinksToTrg x -> n2;
  )", corpus_schema("graph1"));
}

Graph empty_graph() { return Graph(corpus_schema("graph1")); }

}  // namespace

TEST_CASE("parsing accepts the basic forms") {
  CHECK_NOTHROW(greql::parse_query("set(1)"));
  CHECK_NOTHROW(greql::parse_query("from n : V{Node} report n end"));
  CHECK_NOTHROW(greql::parse_query("from n:V{Node} report n end"));
  CHECK_NOTHROW(greql::parse_query("// comment\ncount(V)"));
}

TEST_CASE("parse errors carry positions") {
  Error e = error_of([] { greql::parse_query("from n:V{Node} with report n end"); });
  CHECK(e.code() == ErrorCode::kSyntax);
  REQUIRE(e.pos());
  CHECK(e.pos()->line == 1);
  CHECK(error_of([] { greql::parse_query("count(V{Node}"); }).code() == ErrorCode::kSyntax);
  CHECK(error_of([] { greql::parse_query("1 +"); }).code() == ErrorCode::kSyntax);
}

TEST_CASE("unbound variables are rejected before evaluation") {
  Error e = error_of([] { greql::parse_query("from n : V{Node} report m end"); });
  CHECK(e.code() == ErrorCode::kUnboundVariable);
  CHECK(error_of([] { greql::parse_query("$[0]"); }).code() == ErrorCode::kUnboundVariable);
  greql::ParseOptions dollar;
  dollar.allow_dollar = true;
  CHECK_NOTHROW(greql::parse_query("$[0]", dollar));
  greql::ParseOptions external;
  external.external_names = {"m"};
  CHECK_NOTHROW(greql::parse_query("m", external));
  // A declaration is not visible in its own domain.
  CHECK(error_of([] { greql::parse_query("from n : n report n end"); }).code() ==
        ErrorCode::kUnboundVariable);
}

TEST_CASE("counting nodes") {
  CHECK(query(empty_graph(), "count(V{Node})") == Value(0));
  Graph g = three_nodes();
  CHECK(query(g, "count(V{Node})") ==
        Value(static_cast<std::int64_t>(oracles::count_nodes(g))));
  CHECK(query(g, "count(V)") == Value(5));
  CHECK(query(g, "count(E{Edge_LinksToSrc, Edge_LinksToTrg})") == Value(2));
}

TEST_CASE("greeting text over the extended hello world graph") {
  Graph g = corpus_graph("expected/02-hello-world-extended.glg", "hello_world_extended");
  Value v = greql::evaluate(testing::corpus_query("queries/03-hello-to-text.grq"), g);
  SetBuilder want;
  want.insert(Value("Hello TTC Participants!"));
  CHECK(v == Value(std::move(want).build()));
  Value person = query(g, "from g : V{Greeting} reportSet g <>--{GreetingContainsPerson} end");
  CHECK(person.to_string() == "{{v3}}");
}

TEST_CASE("path steps") {
  Graph g = three_nodes();
  CHECK(query(g, "from n : V{Node} with n.name = \"n1\" "
                 "reportSet n <--{Edge_LinksToSrc} -->{Edge_LinksToTrg} end")
            .to_string() == "{{v3}}");
  CHECK(query(g, "from n : V{Node} with n.name = \"n3\" reportSet n <-> end").to_string() ==
        "{{}}");
  CHECK(query(g, "from n : V{Node} with n.name = \"n2\" reportSet n <--{Edge_LinksToTrg} end")
            .to_string() == "{{v5}}");
  CHECK(query(g, "from a, b : V{Node} with a <--{Edge_LinksToSrc} -->{Edge_LinksToTrg} b "
                 "reportSet a.name, b.name end")
            .to_string() == "{(\"n1\", \"n2\")}");
  CHECK(error_of([&] { query(g, "from x : V{Edge_} reportSet x <>--{Edge_LinksToSrc} end"); })
            .code() == ErrorCode::kTypeMismatch);
  CHECK(error_of([&] { query(g, "from x : V{Edge_} reportSet x -->{Nope} end"); }).code() ==
        ErrorCode::kUnknownClass);
}

TEST_CASE("builtins") {
  Graph g = three_nodes();
  CHECK(query(g, "theElement(set(7))") == Value(7));
  CHECK(error_of([&] { query(g, "theElement(set(1, 2))"); }).code() == ErrorCode::kCardinality);
  CHECK(error_of([&] { query(g, "count(5)"); }).code() == ErrorCode::kTypeMismatch);
  CHECK(error_of([&] { query(g, "count(set(1), set(2))"); }).code() == ErrorCode::kArity);
  CHECK(query(g, "contains(set(1, 2), 2)") == Value(true));
  CHECK(query(g, "isEmpty(list())") == Value(true));
  CHECK(query(g, "flatten(set(set(1, 2), set(2, 3)))").to_string() == "{1, 2, 3}");
  CHECK(query(g, "keySet(map(1 -> \"a\", 2 -> \"b\"))").to_string() == "{1, 2}");
  CHECK(query(g, "from n : V{Node} reportList degree{Edge_LinksToSrc, Edge_LinksToTrg}(n) end")
            .to_string() == "[1, 1, 0]");
  CHECK(query(g, "from n : V{Node} reportList hasType(n, \"Node\"), hasType{Edge_}(n) end")
            .to_string() == "[(true, false), (true, false), (true, false)]");
  CHECK(query(g, "from e : E{Edge_LinksToSrc} reportList startVertex(e), endVertex(e) end")
            .to_string() == "[(v5, v2)]");
}

TEST_CASE("degree zero picks out the isolated nodes") {
  Graph g = three_nodes();
  Value v = query(g,
      "from n : V{Node} with degree{Edge_LinksToSrc, Edge_LinksToTrg}(n) = 0 "
      "reportSet n.name end");
  SetBuilder want;
  for (const auto& name : oracles::isolated_node_names(g)) want.insert(Value(name));
  CHECK(v == Value(std::move(want).build()));
}

TEST_CASE("operators") {
  Graph g = empty_graph();
  CHECK(query(g, "1 + 2 * 3") == Value(7));
  CHECK(query(g, "7 / 2") == Value(3));
  CHECK(query(g, "7.0 / 2") == Value(3.5));
  CHECK(query(g, "-3 % 2") == Value(-1));
  CHECK(query(g, "1 = 1.0") == Value(true));
  CHECK(query(g, "\"a\" ++ 1 ++ true") == Value("a1true"));
  CHECK(query(g, "\"b\" > \"a\"") == Value(true));
  CHECK(query(g, "not (1 < 2) or 2 <= 2") == Value(true));
  CHECK(query(g, "1 < 2 ? \"y\" : \"n\"") == Value("y"));
  CHECK(error_of([&] { query(g, "1 / 0"); }).code() == ErrorCode::kDivisionByZero);
  CHECK(error_of([&] { query(g, "tup(1, 2)[2]"); }).code() == ErrorCode::kIndexOutOfRange);
  CHECK(query(g, "tup(1, 2)[1]") == Value(2));
}

TEST_CASE("undefined propagates and fails comparisons") {
  Graph g = empty_graph();
  CHECK(query(g, "map(1 -> 2)[5]").is_undefined());
  CHECK(query(g, "map(1 -> 2)[5] + 1").is_undefined());
  CHECK(query(g, "map(1 -> 2)[5] = 1") == Value(false));
  CHECK(query(g, "map(1 -> 2)[5] <> 1") == Value(false));
  CHECK(query(g, "false and map(1 -> 2)[5] = 1") == Value(false));
  CHECK(query(g, "true or 1 / 0 = 1") == Value(true));
}

TEST_CASE("comprehension report kinds") {
  Graph g = three_nodes();
  CHECK(query(g, "from x : list(1, 2, 1) report x end").to_string() == "[1, 2, 1]");
  CHECK(query(g, "from x : list(1, 2, 1) reportSet x end").to_string() == "{1, 2}");
  CHECK(query(g, "from x : list(1, 2) reportMap x -> x * 10 end").to_string() ==
        "{1 -> 10, 2 -> 20}");
  CHECK(error_of([&] { query(g, "from x : list(1, 2) reportMap 0 -> x end"); }).code() ==
        ErrorCode::kDuplicateKey);
  CHECK(query(g, "from x : list(1, 2), y : list(x, 10) report x, y end").to_string() ==
        "[(1, 1), (1, 10), (2, 2), (2, 10)]");
  CHECK(query(g, "from x : set(1) reportSet from x : set(2) reportSet x end end").to_string() ==
        "{{2}}");
  CHECK(query(g, "from x : set(1, 2, 3) with x <> 2 reportSet x end").to_string() == "{1, 3}");
  CHECK(error_of([&] { query(g, "from x : 5 report x end"); }).code() == ErrorCode::kTypeMismatch);
  CHECK(error_of([&] { query(g, "from x : set(1) with x report x end"); }).code() ==
        ErrorCode::kTypeMismatch);
}

TEST_CASE("element sets honor subclasses and the exact marker") {
  Schema* raw = nullptr;
  auto schema = std::make_shared<Schema>("s");
  raw = schema.get();
  raw->define_vertex_class("A", false, {}, {});
  raw->define_vertex_class("B", false, {"A"}, {});
  Graph g(schema);
  g.create_vertex("A");
  g.create_vertex("B");
  CHECK(query(g, "count(V{A})") == Value(2));
  CHECK(query(g, "count(V{A!})") == Value(1));
  CHECK(query(g, "V{B}").to_string() == "{v2}");
}

TEST_CASE("evaluation errors point at the failing expression") {
  Graph g = empty_graph();
  Error e = error_of([&] { query(g, "1 +\n  theElement(set())"); });
  CHECK(e.code() == ErrorCode::kCardinality);
  REQUIRE(e.pos());
  CHECK(e.pos()->line == 2);
}

TEST_CASE("evaluation is repeatable") {
  Graph g = corpus_graph("graphs/graph1_example.glg", "graph1");
  auto q = testing::corpus_query("queries/07-circle-of-three.grq");
  Value first = greql::evaluate(q, g);
  CHECK(greql::evaluate(q, g).to_string() == first.to_string());
}

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

#include "gretlite/canonical.hpp"
#include "gretlite/error.hpp"
#include "gretlite/gretl/engine.hpp"
#include "gretlite/gretl/parser.hpp"
#include "gretlite/io/graph_format.hpp"
#include "gretlite/oracles.hpp"
#include "support.hpp"

using namespace gretlite;
using gretlite::testing::corpus_schema;
using gretlite::testing::corpus_script;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

gretl::ExecutionResult out_place(std::string_view script, std::string_view schema,
                                 const Graph* source = nullptr) {
  return gretl::execute(gretl::parse_script(script), source, corpus_schema(schema), false);
}

Graph one_link() {
  return io::load_graph(R"(graph g conforms Graph1;
    r : Graph_;
    a : Node { name = "a" };
    b : Node { name = "b" };
    x : Edge_;
    c : Graph_ContainsNodes r -> a;
    s : Edge_LinksToSrc x -> a;
    t : Edge_LinksToTrg x -> b;
  )", corpus_schema("graph1"));
}

Graph graph3_chain(std::size_t n) {
  auto schema = corpus_schema("graph3");
  Graph g(schema);
  std::vector<VertexId> v;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(g.create_vertex("Node"));
    g.set_attribute(v.back(), "text", Value(std::string(1, static_cast<char>('a' + i))));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) g.create_edge("NodeLinksToLinksTo", v[i], v[i + 1]);
  return g;
}

std::vector<std::string> link_texts(const Graph& g) {
  std::vector<std::string> out;
  for (EdgeId e : g.edges()) {
    if (g.class_of(e).name != "NodeLinksToLinksTo") continue;
    out.push_back(g.get_attribute(g.start_of(e), "text").as<std::string>() +
                  g.get_attribute(g.end_of(e), "text").as<std::string>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Op>
const Op& only(const gretl::Transformation& t) {
  return std::get<Op>(t.statements.front().op);
}

}  // namespace

TEST_CASE("hello world creates one greeting") {
  auto r = gretl::execute(corpus_script("scripts/01-hello-world.grt"), nullptr,
                          corpus_schema("hello_world"), false);
  REQUIRE(r.graph.vertex_count() == 1);
  CHECK(r.graph.edge_count() == 0);
  VertexId v = r.graph.vertices().front();
  CHECK(r.graph.class_of(v).name == "Greeting");
  CHECK(r.graph.get_attribute(v, "text") == Value("Hello World"));
  CHECK(r.trace.image(r.graph.schema(), "Greeting", Value(1)) == ElementRef(v));
  CHECK(r.graph.name() == "HelloWorld");
}

TEST_CASE("extended hello world builds the subgraph with archetype 1") {
  auto r = gretl::execute(corpus_script("scripts/02-hello-world-extended.grt"), nullptr,
                          corpus_schema("hello_world_extended"), false);
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  std::vector<std::string> classes;
  for (const auto& e : r.trace.entries()) {
    CHECK(e.archetype == Value(1));
    classes.push_back(e.class_name);
  }
  std::sort(classes.begin(), classes.end());
  CHECK(classes == std::vector<std::string>{"Greeting", "GreetingMessage", "Person"});
  CHECK(!testing::check_trace_bijective(r.graph, r.trace));
}

TEST_CASE("reversing a single conceptual edge") {
  Graph g = one_link();
  auto r = gretl::execute(corpus_script("scripts/09-reverse-edges.grt"), &g, nullptr, true);
  CHECK(oracles::check_reversed(g, r.graph) == std::nullopt);
  CHECK(r.graph.vertex_count() == g.vertex_count());
  CHECK(r.graph.edge_count() == g.edge_count());
  auto twice = gretl::execute(corpus_script("scripts/09-reverse-edges.grt"), &r.graph,
                              nullptr, true);
  CHECK(canonical_form(twice.graph) == canonical_form(g));
}

TEST_CASE("overlapping matches are skipped") {
  gretl::ExecutionContext ctx(graph3_chain(3));
  auto t = gretl::parse_script(
      "transformation t;"
      "MatchReplace (x := $[0]) -->{NodeLinksToLinksTo} (y := $[1]) <=="
      "  from e : E{NodeLinksToLinksTo} reportList startVertex(e), endVertex(e) end;");
  const auto& op = only<gretl::MatchReplace>(t);
  Value matches = greql::evaluate(op.query, ctx.query_graph());
  auto stats = ctx.match_replace(op.pattern, op.query);
  CHECK(stats.applied == 1);
  CHECK(stats.skipped == 1);
  CHECK(stats.applied_matches == std::vector<std::size_t>{0});
  CHECK(!testing::check_applied_disjoint(matches, stats));
}

TEST_CASE("unreferenced match elements are deleted") {
  gretl::ExecutionContext ctx(graph3_chain(2));
  auto t = gretl::parse_script(
      "transformation t;"
      "MatchReplace (x := $[0]) <== from e : E{NodeLinksToLinksTo} "
      "  reportSet startVertex(e), e end;");
  auto stats = ctx.match_replace(only<gretl::MatchReplace>(t).pattern,
                                 only<gretl::MatchReplace>(t).query);
  CHECK(stats.applied == 1);
  CHECK(ctx.target().vertex_count() == 2);
  CHECK(ctx.target().edge_count() == 0);
}

TEST_CASE("deleting an isolated node removes one element") {
  Graph g = io::load_graph(R"(graph g conforms Graph1;
    n : Node { name = "n1" };
    m : Node { name = "n2" };
  )", corpus_schema("graph1"));
  gretl::ExecutionContext ctx{Graph(g)};
  auto t = corpus_script("scripts/12-delete-node-n1.grt");
  CHECK(ctx.remove(only<gretl::Delete>(t).query) == 1);
  CHECK(ctx.target().vertex_count() == 1);
}

TEST_CASE("deletion cascades to incident edges") {
  Graph g = one_link();
  auto r = gretl::execute(corpus_script("scripts/13-delete-node-n1-and-edges.grt"),
                          &g, nullptr, true);
  CHECK(oracles::removed_elements(g, r.graph).empty());
  Graph named = io::load_graph(R"(graph g conforms Graph1;
    r : Graph_;
    a : Node { name = "n1" };
    x : Edge_;
    c : Graph_ContainsNodes r -> a;
    s : Edge_LinksToSrc x -> a;
  )", corpus_schema("graph1"));
  auto d = gretl::execute(corpus_script("scripts/13-delete-node-n1-and-edges.grt"),
                          &named, nullptr, true);
  CHECK(oracles::removed_elements(named, d.graph) ==
        oracles::expected_deletion(named, "n1", true));
  CHECK(oracles::incidences_consistent(d.graph));
  CHECK(d.graph.vertex_count() == 1);
}

TEST_CASE("transitive edges add one step of composition") {
  auto script = corpus_script("scripts/14-transitive-edges.grt");
  Graph three = graph3_chain(3);
  auto r = gretl::execute(script, &three, nullptr, true);
  CHECK(link_texts(r.graph) == std::vector<std::string>{"ab", "ac", "bc"});

  Graph four = graph3_chain(4);
  auto r4 = gretl::execute(script, &four, nullptr, true);
  CHECK(link_texts(r4.graph) == std::vector<std::string>{"ab", "ac", "bc", "bd", "cd"});
}

TEST_CASE("in-place operations are rejected out-place") {
  CHECK(code_of([] {
    out_place("transformation t; Delete <== V;", "graph1");
  }) == ErrorCode::kNotInPlace);
  CHECK(code_of([] {
    out_place("transformation t; MatchReplace ($[0]) <== set(tup(1));", "graph1");
  }) == ErrorCode::kNotInPlace);
  CHECK(code_of([] {
    out_place("transformation t; Iteratively { Delete <== V; }", "graph1");
  }) == ErrorCode::kNotInPlace);
}

TEST_CASE("archetype collisions") {
  CHECK(code_of([] {
    out_place("transformation t; CreateVertices Node <== set(1);"
              "CreateVertices Node <== set(1);", "graph1");
  }) == ErrorCode::kArchetypeCollision);
  // Node and Edge_ share GraphComponent, so img_GraphComponent would be ambiguous.
  CHECK(code_of([] {
    out_place("transformation t; CreateVertices Node <== set(1);"
              "CreateVertices Edge_ <== set(1);", "graph2");
  }) == ErrorCode::kArchetypeCollision);
  // Unrelated classes may reuse an archetype.
  auto r = out_place("transformation t; CreateVertices Node <== set(1);"
                     "CreateVertices Graph_ <== set(1);", "graph3");
  CHECK(r.graph.vertex_count() == 2);
}

TEST_CASE("unresolvable archetypes") {
  CHECK(code_of([] {
    out_place("transformation t; CreateVertices Node <== set(1);"
              "CreateEdges NodeLinksToLinksTo <== set(tup(1, 1, 2));", "graph3");
  }) == ErrorCode::kUnresolvableArchetype);
  CHECK(code_of([] {
    out_place("transformation t; SetAttributes Node.text <== map(7 -> \"x\");", "graph3");
  }) == ErrorCode::kUnresolvableArchetype);
}

TEST_CASE("operation results are type checked") {
  CHECK(code_of([] {
    out_place("transformation t; CreateVertices Node <== 1;", "graph3");
  }) == ErrorCode::kTypeMismatch);
  CHECK(code_of([] {
    out_place("transformation t; SetAttributes Node.text <== set(1);", "graph3");
  }) == ErrorCode::kTypeMismatch);
  CHECK(code_of([] {
    out_place("transformation t; CreateVertices Nope <== set(1);", "graph3");
  }) == ErrorCode::kUnknownClass);
  CHECK(code_of([] {
    out_place("transformation t; CreateVertices GraphComponent <== set(1);", "graph2");
  }) == ErrorCode::kAbstractInstantiation);
}

TEST_CASE("errors name the failing operation") {
  try {
    out_place("transformation t;\nCreateVertices Node <== set(1);\n"
              "CreateVertices Node <== set(1);", "graph3");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("operation 2 (CreateVertices)") != std::string::npos);
  }
}

TEST_CASE("iteration stops at a fixpoint or the round limit") {
  gretl::ExecutionContext ctx(graph3_chain(2));
  auto stable = gretl::parse_script("transformation t; Iteratively { Delete <== set(); }");
  CHECK(ctx.iteratively(only<gretl::Iteratively>(stable).body) == 1);

  gretl::ExecutionContext spinning(graph3_chain(1));
  spinning.round_limit = 5;
  auto churn = gretl::parse_script(
      "transformation t; Iteratively { MatchReplace (Node | $[0]) <== "
      "from n : V{Node} reportSet n, 0 end; }");
  CHECK(code_of([&] { spinning.iteratively(only<gretl::Iteratively>(churn).body); }) ==
        ErrorCode::kRoundLimit);
}

TEST_CASE("script variables are visible to later queries") {
  auto r = out_place("transformation t; xs := set(1, 2);"
                     "CreateVertices Node <== xs;"
                     "SetAttributes Node.text <== from x : xs reportMap x -> \"n\" ++ x end;",
                     "graph3");
  CHECK(r.graph.vertex_count() == 2);
  CHECK(code_of([] { gretl::parse_script("transformation t; CreateVertices Node <== ys;"); }) ==
        ErrorCode::kUnboundVariable);
}

TEST_CASE("script syntax errors") {
  CHECK(code_of([] { gretl::parse_script("CreateVertices Node <== set(1);"); }) ==
        ErrorCode::kSyntax);
  CHECK(code_of([] { gretl::parse_script("transformation t; Frobnicate;"); }) ==
        ErrorCode::kSyntax);
  CHECK(code_of([] { gretl::parse_script("transformation t; CreateSubgraph (Node) <== set(1);"); }) ==
        ErrorCode::kSyntax);
  CHECK(code_of([] {
    gretl::parse_script("transformation t; CreateSubgraph (a := $) <== set(1);");
  }) == ErrorCode::kMalformedTemplate);
  CHECK(code_of([] {
    gretl::parse_script("transformation t; CreateSubgraph (Node | $) -->{E} b <== set(1);");
  }) == ErrorCode::kMalformedTemplate);
}

TEST_CASE("out-place runs leave the source untouched") {
  Graph g = testing::corpus_graph("graphs/graph1_example.glg", "graph1");
  CHECK(!testing::check_source_isolation(g, corpus_script("scripts/10-simple-migration.grt"),
                                         corpus_schema("graph2")));
  Graph complete = testing::corpus_graph("graphs/graph1_complete.glg", "graph1");
  CHECK(!testing::check_source_isolation(complete,
                                         corpus_script("scripts/11-topology-changing.grt"),
                                         corpus_schema("graph3")));
}

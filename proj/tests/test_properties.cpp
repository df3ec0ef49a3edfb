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

#include <random>

#include "gretlite/cli/corpus.hpp"
#include "gretlite/gretl/engine.hpp"
#include "gretlite/oracles.hpp"
#include "support.hpp"

using namespace gretlite;
using gretlite::testing::corpus_schema;
using gretlite::testing::corpus_script;

namespace {

std::vector<Graph> sample(std::size_t count, const oracles::RandomGraphOptions& options,
                          std::uint32_t seed = 11) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(oracles::random_graph1(corpus_schema("graph1"), rng, options));
  }
  return out;
}

}  // namespace

TEST_CASE("random fixtures cover every counting case") {
  std::size_t loops = 0, circles = 0, isolated = 0, dangling = 0;
  for (const Graph& g : sample(200, {})) {
    loops += !oracles::loops(g).empty();
    circles += !oracles::three_circles(g).empty();
    isolated += !oracles::isolated_node_names(g).empty();
    dangling += !oracles::dangling_edges(g).empty();
    CHECK(oracles::count_nodes(g) <= 10);
    CHECK(oracles::conceptual_edges(g).size() <= 15);
  }
  CHECK(loops > 10);
  CHECK(circles > 10);
  CHECK(isolated > 10);
  CHECK(dangling > 10);
  for (const Graph& g : sample(50, {10, 15, false})) CHECK(oracles::dangling_edges(g).empty());
}

TEST_CASE("oracles reject wrong results") {
  Graph g = testing::corpus_graph("graphs/graph1_example.glg", "graph1");
  CHECK(oracles::check_reversed(g, g).has_value());

  auto migrated = gretl::execute(corpus_script("scripts/10-simple-migration.grt"), &g,
                                 corpus_schema("graph2"), false);
  oracles::ImageOf nothing = [](const ElementRef&) { return std::optional<ElementRef>(); };
  CHECK(oracles::check_migration(g, migrated.graph, nothing).has_value());

  Graph chain = oracles::chain(corpus_schema("graph3"), 3);
  CHECK(oracles::link_pairs(chain) != oracles::one_step_closure(chain));
  CHECK(oracles::expected_deletion(g, "n1", true).size() >
        oracles::expected_deletion(g, "n1", false).size());
}

TEST_CASE("property checks on small graphs") {
  auto graphs = sample(30, {4, 3, true});
  auto script = corpus_script("scripts/09-reverse-edges.grt");
  const auto& reverse = std::get<gretl::MatchReplace>(script.statements.front().op);
  for (const Graph& g : graphs) {
    CHECK(g.vertex_count() <= 8);
    CHECK(!testing::check_comprehensions(g));
    CHECK(!testing::check_round_trip(g));
    auto r = gretl::execute(corpus_script("scripts/10-simple-migration.grt"), &g,
                            corpus_schema("graph2"), false);
    CHECK(!testing::check_trace_bijective(r.graph, r.trace));
    CHECK(!testing::check_source_isolation(g, corpus_script("scripts/10-simple-migration.grt"),
                                           corpus_schema("graph2")));
    gretl::ExecutionContext ctx{Graph(g)};
    Value matches = greql::evaluate(reverse.query, ctx.query_graph());
    CHECK(!testing::check_applied_disjoint(matches, ctx.match_replace(reverse.pattern,
                                                                      reverse.query)));
  }
}

TEST_CASE("disjointness check detects shared elements") {
  Graph g = oracles::chain(corpus_schema("graph3"), 3);
  auto vs = g.vertices();
  Value matches(List(std::vector<Value>{Value(Tuple(std::vector<Value>{Value(vs[0]), Value(vs[1])})),
                                        Value(Tuple(std::vector<Value>{Value(vs[1]), Value(vs[2])}))}));
  gretl::MatchReplaceStats stats;
  stats.applied = 2;
  stats.applied_matches = {0, 1};
  CHECK(testing::check_applied_disjoint(matches, stats).has_value());
}

TEST_CASE("corpus runs are deterministic") {
  CHECK(!testing::check_corpus_determinism());
}

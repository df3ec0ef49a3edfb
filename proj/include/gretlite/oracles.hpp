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

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gretlite/graph.hpp"

// Brute-force reference answers for the bundled tasks. Everything here walks
// the graph API directly (incidence lists, class names, attributes) and never
// goes through the query or transformation engines, so it can be used to
// check them.
namespace gretlite::oracles {

// A Node-to-Node link modeled as an Edge_ vertex with up to one src and one
// trg link edge.
struct ConceptualEdge {
  VertexId edge;
  std::optional<VertexId> src;
  std::optional<VertexId> trg;
  std::size_t link_count = 0;
};

std::vector<VertexId> nodes(const Graph& g);
std::vector<ConceptualEdge> conceptual_edges(const Graph& g);
std::string node_name(const Graph& g, VertexId v);

std::size_t count_nodes(const Graph& g);
// Edge_ vertices whose src and trg are the same node, in graph order.
std::vector<VertexId> loops(const Graph& g);
// Names of nodes without any link edge, in graph order.
std::vector<std::string> isolated_node_names(const Graph& g);
// Name triples (a, b, c) of pairwise distinct nodes with links a->b, b->c,
// c->a, by exhaustive enumeration of all ordered triples.
std::vector<std::tuple<std::string, std::string, std::string>> three_circles(
    const Graph& g);
// Edge_ vertices with exactly one link edge, in graph order.
std::vector<VertexId> dangling_edges(const Graph& g);

// Summary strings as produced by the isolated / circles / dangling queries.
std::string isolated_summary(const Graph& g);
std::string circles_summary(const Graph& g);
std::string dangling_summary(const Graph& g);

// Each complete conceptual edge of `before` must have src and trg swapped in
// `after`; incomplete ones and everything else stay as they were. Returns a
// description of the first violation.
std::optional<std::string> check_reversed(const Graph& before,
                                          const Graph& after);

using ImageOf = std::function<std::optional<ElementRef>(const ElementRef&)>;

std::optional<std::string> check_migration(const Graph& source,
                                           const Graph& target,
                                           const ImageOf& image);
std::optional<std::string> check_topology(const Graph& source,
                                          const Graph& target,
                                          const ImageOf& image);

// Elements a Delete of the nodes named `name` must remove: the nodes, their
// incident edges, and with `with_conceptual_edges` also every Edge_ vertex
// linked to them together with its incident edges.
std::set<ElementRef> expected_deletion(const Graph& g, const std::string& name,
                                       bool with_conceptual_edges);
// Elements live in `before` but not in `after` (ids are stable in place).
std::set<ElementRef> removed_elements(const Graph& before, const Graph& after);
// Every incidence refers to a live edge whose endpoints are live.
bool incidences_consistent(const Graph& g);

// NodeLinksToLinksTo edges as (start, end) pairs, sorted, duplicates kept.
std::vector<std::pair<VertexId, VertexId>> link_pairs(const Graph& g);
// Original links plus each missing pair (x, z) with x -> y -> z for some y.
std::vector<std::pair<VertexId, VertexId>> one_step_closure(const Graph& g);

struct RandomGraphOptions {
  std::size_t max_nodes = 10;
  std::size_t max_edges = 15;
  bool dangling = true;
};

// Graphs over the graph1 schema: one Graph_, up to max_nodes Node vertices
// named n1.., up to max_edges conceptual edges with containment edges.
Graph random_graph1(std::shared_ptr<const Schema> schema, std::mt19937& rng,
                    const RandomGraphOptions& options = {});
// DAGs over the topology schema with links only from lower to higher node
// rank.
Graph random_dag(std::shared_ptr<const Schema> schema, std::mt19937& rng,
                 std::size_t max_nodes = 8);
// A chain of `n` nodes named a, b, c, ... linked in order.
Graph chain(std::shared_ptr<const Schema> schema, std::size_t n);

}  // namespace gretlite::oracles

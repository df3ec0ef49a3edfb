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

#include "gretlite/oracles.hpp"

#include <algorithm>
#include <map>

namespace gretlite::oracles {

namespace {

constexpr std::string_view kSrc = "Edge_LinksToSrc";
constexpr std::string_view kTrg = "Edge_LinksToTrg";
constexpr std::string_view kLink = "NodeLinksToLinksTo";

bool is_link(const Graph& g, EdgeId e) {
  const std::string& n = g.class_of(e).name;
  return n == kSrc || n == kTrg;
}

std::vector<VertexId> vertices_of(const Graph& g, std::string_view cls) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (g.class_of(v).name == cls) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> edges_of(const Graph& g, std::string_view cls) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.edges()) {
    if (g.class_of(e).name == cls) out.push_back(e);
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string vertex_text(VertexId v) { return "v" + std::to_string(v.value); }

template <typename T, typename F>
std::string braced(const std::vector<T>& items, F render) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += render(items[i]);
  }
  return out + "}";
}

std::string string_attr(const Graph& g, const ElementRef& ref,
                        std::string_view attr) {
  return g.get_attribute(ref, attr).as<std::string>();
}

std::string fail(const std::string& what) { return what; }

}  // namespace

std::vector<VertexId> nodes(const Graph& g) { return vertices_of(g, "Node"); }

std::string node_name(const Graph& g, VertexId v) {
  const ClassBase& cls = g.class_of(v);
  return string_attr(g, v, cls.attribute_index("name") ? "name" : "text");
}

std::vector<ConceptualEdge> conceptual_edges(const Graph& g) {
  std::vector<ConceptualEdge> out;
  for (VertexId v : vertices_of(g, "Edge_")) {
    ConceptualEdge ce{v, std::nullopt, std::nullopt, 0};
    for (const Incidence& inc : g.incidences(v)) {
      if (!is_link(g, inc.edge)) continue;
      ++ce.link_count;
      if (!inc.outgoing) continue;
      if (g.class_of(inc.edge).name == kSrc) ce.src = g.end_of(inc.edge);
      if (g.class_of(inc.edge).name == kTrg) ce.trg = g.end_of(inc.edge);
    }
    out.push_back(ce);
  }
  return out;
}

std::size_t count_nodes(const Graph& g) { return nodes(g).size(); }

std::vector<VertexId> loops(const Graph& g) {
  std::vector<VertexId> out;
  for (const auto& ce : conceptual_edges(g)) {
    if (ce.src && ce.trg && *ce.src == *ce.trg) out.push_back(ce.edge);
  }
  return out;
}

std::vector<std::string> isolated_node_names(const Graph& g) {
  std::vector<std::string> out;
  for (VertexId v : nodes(g)) {
    bool linked = false;
    for (const Incidence& inc : g.incidences(v)) linked |= is_link(g, inc.edge);
    if (linked) continue;
    std::string name = node_name(g, v);
    if (std::find(out.begin(), out.end(), name) == out.end()) {
      out.push_back(name);
    }
  }
  return out;
}

std::vector<std::tuple<std::string, std::string, std::string>> three_circles(
    const Graph& g) {
  std::set<std::pair<VertexId, VertexId>> linked;
  for (const auto& ce : conceptual_edges(g)) {
    if (ce.src && ce.trg) linked.emplace(*ce.src, *ce.trg);
  }
  auto ns = nodes(g);
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (VertexId a : ns) {
    for (VertexId b : ns) {
      for (VertexId c : ns) {
        if (a == b || b == c || a == c) continue;
        if (!linked.contains({a, b}) || !linked.contains({b, c}) ||
            !linked.contains({c, a})) {
          continue;
        }
        std::tuple t{node_name(g, a), node_name(g, b), node_name(g, c)};
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
    }
  }
  return out;
}

std::vector<VertexId> dangling_edges(const Graph& g) {
  std::vector<VertexId> out;
  for (const auto& ce : conceptual_edges(g)) {
    if (ce.link_count == 1) out.push_back(ce.edge);
  }
  return out;
}

std::string isolated_summary(const Graph& g) {
  auto names = isolated_node_names(g);
  return "Isolated nodes: " + std::to_string(names.size()) + " " +
         braced(names, quoted);
}

std::string circles_summary(const Graph& g) {
  auto circles = three_circles(g);
  return "Circles of three: " + std::to_string(circles.size()) + " " +
         braced(circles, [](const auto& t) {
           return "(" + quoted(std::get<0>(t)) + ", " + quoted(std::get<1>(t)) +
                  ", " + quoted(std::get<2>(t)) + ")";
         });
}

std::string dangling_summary(const Graph& g) {
  auto d = dangling_edges(g);
  return "Dangling edges: " + std::to_string(d.size()) + " " +
         braced(d, vertex_text);
}

std::optional<std::string> check_reversed(const Graph& before,
                                          const Graph& after) {
  if (nodes(before) != nodes(after)) return fail("node set changed");
  for (VertexId n : nodes(before)) {
    if (node_name(before, n) != node_name(after, n)) {
      return fail("name of " + vertex_text(n) + " changed");
    }
  }
  auto old_edges = conceptual_edges(before);
  auto new_edges = conceptual_edges(after);
  if (old_edges.size() != new_edges.size()) {
    return fail("number of conceptual edges changed");
  }
  for (std::size_t i = 0; i < old_edges.size(); ++i) {
    const auto& o = old_edges[i];
    const auto& n = new_edges[i];
    if (o.edge != n.edge) return fail("conceptual edge order changed");
    bool complete = o.src && o.trg;
    auto want_src = complete ? o.trg : o.src;
    auto want_trg = complete ? o.src : o.trg;
    if (n.src != want_src || n.trg != want_trg || n.link_count != o.link_count) {
      return fail("conceptual edge " + vertex_text(o.edge) +
                  " has the wrong endpoints");
    }
  }
  if (before.vertex_count() != after.vertex_count() ||
      before.edge_count() != after.edge_count()) {
    return fail("element counts changed");
  }
  return std::nullopt;
}

namespace {

std::optional<std::string> check_vertex_images(
    const Graph& source, const Graph& target, const ImageOf& image,
    std::string_view cls, bool text_from_name, std::size_t& total) {
  auto src = vertices_of(source, cls);
  if (src.size() != vertices_of(target, cls).size()) {
    return fail(std::string(cls) + " count differs");
  }
  total += src.size();
  for (VertexId v : src) {
    auto img = image(v);
    if (!img || !std::holds_alternative<VertexId>(*img) ||
        !target.is_live(*img) || target.class_of(*img).name != cls) {
      return fail(std::string(cls) + " " + vertex_text(v) + " has no image");
    }
    if (!target.class_of(*img).attribute_index("text")) {
      if (cls == "Node") return fail("target Node has no text attribute");
      continue;
    }
    std::string want =
        text_from_name && cls == "Node" ? string_attr(source, v, "name") : "";
    if (string_attr(target, *img, "text") != want) {
      return fail("image of " + vertex_text(v) + " has the wrong text");
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_edge_images(
    const Graph& source, const Graph& target, const ImageOf& image,
    std::string_view source_cls, std::string_view target_cls) {
  for (EdgeId e : edges_of(source, source_cls)) {
    auto img = image(e);
    if (!img || !std::holds_alternative<EdgeId>(*img) || !target.is_live(*img)) {
      return fail(std::string(source_cls) + " edge has no image");
    }
    EdgeId t = std::get<EdgeId>(*img);
    if (target.class_of(t).name != target_cls) {
      return fail("image of a " + std::string(source_cls) + " edge is a " +
                  target.class_of(t).name);
    }
    auto s = image(source.start_of(e));
    auto d = image(source.end_of(e));
    if (!s || !d || ElementRef(target.start_of(t)) != *s ||
        ElementRef(target.end_of(t)) != *d) {
      return fail("image of a " + std::string(source_cls) +
                  " edge has the wrong endpoints");
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_migration(const Graph& source,
                                           const Graph& target,
                                           const ImageOf& image) {
  std::size_t vertices = 0;
  for (std::string_view cls : {"Graph_", "Node", "Edge_"}) {
    if (auto err = check_vertex_images(source, target, image, cls, true, vertices)) {
      return err;
    }
  }
  if (target.vertex_count() != vertices) return fail("extra target vertices");
  for (std::string_view cls : {kSrc, kTrg}) {
    if (edges_of(source, cls).size() != edges_of(target, cls).size()) {
      return fail(std::string(cls) + " count differs");
    }
    if (auto err = check_edge_images(source, target, image, cls, cls)) return err;
  }
  std::size_t contains = edges_of(source, "Graph_ContainsNodes").size() +
                         edges_of(source, "Graph_ContainsEdges").size();
  if (edges_of(target, "Graph_ContainsGcs").size() != contains) {
    return fail("Graph_ContainsGcs count differs from the containment edges");
  }
  for (std::string_view cls : {"Graph_ContainsNodes", "Graph_ContainsEdges"}) {
    if (auto err = check_edge_images(source, target, image, cls,
                                     "Graph_ContainsGcs")) {
      return err;
    }
  }
  std::size_t edges = contains + edges_of(source, kSrc).size() +
                      edges_of(source, kTrg).size();
  if (target.edge_count() != edges) return fail("extra target edges");
  return std::nullopt;
}

std::optional<std::string> check_topology(const Graph& source,
                                          const Graph& target,
                                          const ImageOf& image) {
  std::size_t vertices = 0;
  for (std::string_view cls : {"Graph_", "Node"}) {
    if (auto err = check_vertex_images(source, target, image, cls, true, vertices)) {
      return err;
    }
  }
  if (target.vertex_count() != vertices) return fail("extra target vertices");
  if (auto err = check_edge_images(source, target, image, "Graph_ContainsNodes",
                                   "Graph_ContainsNodes")) {
    return err;
  }
  auto conceptual = conceptual_edges(source);
  if (edges_of(target, kLink).size() != conceptual.size()) {
    return fail("NodeLinksToLinksTo count differs from the Edge_ count");
  }
  for (const auto& ce : conceptual) {
    auto img = image(ce.edge);
    if (!img || !std::holds_alternative<EdgeId>(*img) || !target.is_live(*img)) {
      return fail("Edge_ " + vertex_text(ce.edge) + " has no edge image");
    }
    EdgeId t = std::get<EdgeId>(*img);
    if (!ce.src || !ce.trg) return fail("source has a dangling Edge_");
    if (target.class_of(t).name != kLink ||
        ElementRef(target.start_of(t)) != image(*ce.src) ||
        ElementRef(target.end_of(t)) != image(*ce.trg)) {
      return fail("image of Edge_ " + vertex_text(ce.edge) +
                  " has the wrong endpoints");
    }
  }
  std::size_t edges =
      edges_of(source, "Graph_ContainsNodes").size() + conceptual.size();
  if (target.edge_count() != edges) return fail("extra target edges");
  return std::nullopt;
}

std::set<ElementRef> expected_deletion(const Graph& g, const std::string& name,
                                       bool with_conceptual_edges) {
  std::set<ElementRef> out;
  auto take_vertex = [&](VertexId v) {
    out.insert(v);
    for (const Incidence& inc : g.incidences(v)) out.insert(inc.edge);
  };
  for (VertexId n : nodes(g)) {
    if (string_attr(g, n, "name") != name) continue;
    take_vertex(n);
    if (!with_conceptual_edges) continue;
    for (const Incidence& inc : g.incidences(n)) {
      if (!inc.outgoing && is_link(g, inc.edge)) take_vertex(g.start_of(inc.edge));
    }
  }
  return out;
}

std::set<ElementRef> removed_elements(const Graph& before, const Graph& after) {
  std::set<ElementRef> out;
  for (VertexId v : before.vertices()) {
    if (!after.is_live(v)) out.insert(v);
  }
  for (EdgeId e : before.edges()) {
    if (!after.is_live(e)) out.insert(e);
  }
  return out;
}

bool incidences_consistent(const Graph& g) {
  for (VertexId v : g.vertices()) {
    for (const Incidence& inc : g.incidences(v)) {
      if (!g.is_live(inc.edge)) return false;
      VertexId here = inc.outgoing ? g.start_of(inc.edge) : g.end_of(inc.edge);
      if (here != v) return false;
    }
  }
  for (EdgeId e : g.edges()) {
    VertexId s = g.start_of(e);
    VertexId t = g.end_of(e);
    if (!g.is_live(s) || !g.is_live(t)) return false;
    auto has = [&](VertexId v, bool outgoing) {
      auto incs = g.incidences(v);
      return std::any_of(incs.begin(), incs.end(), [&](const Incidence& i) {
        return i.edge == e && i.outgoing == outgoing;
      });
    };
    if (!has(s, true) || !has(t, false)) return false;
  }
  return true;
}

std::vector<std::pair<VertexId, VertexId>> link_pairs(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (EdgeId e : edges_of(g, kLink)) out.emplace_back(g.start_of(e), g.end_of(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<VertexId, VertexId>> one_step_closure(const Graph& g) {
  auto original = link_pairs(g);
  std::set<std::pair<VertexId, VertexId>> present(original.begin(),
                                                  original.end());
  std::set<std::pair<VertexId, VertexId>> added;
  for (const auto& [x, y] : original) {
    for (const auto& [y2, z] : original) {
      if (y2 != y) continue;
      if (!present.contains({x, z})) added.emplace(x, z);
    }
  }
  auto out = original;
  out.insert(out.end(), added.begin(), added.end());
  std::sort(out.begin(), out.end());
  return out;
}

Graph random_graph1(std::shared_ptr<const Schema> schema, std::mt19937& rng,
                    const RandomGraphOptions& options) {
  Graph g(std::move(schema), "random");
  VertexId root = g.create_vertex("Graph_");
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, options.max_nodes)(rng);
  std::vector<VertexId> ns;
  for (std::size_t i = 0; i < k; ++i) {
    VertexId n = g.create_vertex("Node");
    g.set_attribute(n, "name", Value("n" + std::to_string(i + 1)));
    g.create_edge("Graph_ContainsNodes", root, n);
    ns.push_back(n);
  }
  if (ns.empty()) return g;
  std::size_t m = std::uniform_int_distribution<std::size_t>(0, options.max_edges)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, ns.size() - 1);
  std::uniform_int_distribution<int> percent(0, 99);
  for (std::size_t i = 0; i < m; ++i) {
    VertexId e = g.create_vertex("Edge_");
    g.create_edge("Graph_ContainsEdges", root, e);
    bool src = true;
    bool trg = true;
    if (options.dangling && percent(rng) < 15) {
      (percent(rng) < 50 ? src : trg) = false;
    }
    VertexId s = ns[pick(rng)];
    VertexId t = ns[pick(rng)];
    if (src) g.create_edge(std::string(kSrc), e, s);
    if (trg) g.create_edge(std::string(kTrg), e, t);
  }
  return g;
}

namespace {

std::vector<VertexId> topology_nodes(Graph& g, std::size_t n) {
  VertexId root = g.create_vertex("Graph_");
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = g.create_vertex("Node");
    std::string label = i < 26 ? std::string(1, static_cast<char>('a' + i))
                               : "n" + std::to_string(i + 1);
    g.set_attribute(v, "text", Value(label));
    g.create_edge("Graph_ContainsNodes", root, v);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Graph random_dag(std::shared_ptr<const Schema> schema, std::mt19937& rng,
                 std::size_t max_nodes) {
  Graph g(std::move(schema), "dag");
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_nodes)(rng);
  auto ns = topology_nodes(g, n);
  std::uniform_int_distribution<int> percent(0, 99);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (percent(rng) < 35) g.create_edge(std::string(kLink), ns[i], ns[j]);
    }
  }
  return g;
}

Graph chain(std::shared_ptr<const Schema> schema, std::size_t n) {
  Graph g(std::move(schema), "chain");
  auto ns = topology_nodes(g, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.create_edge(std::string(kLink), ns[i], ns[i + 1]);
  }
  return g;
}

}  // namespace gretlite::oracles

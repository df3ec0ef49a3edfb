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

#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unistd.h>

#include "gretlite/canonical.hpp"
#include "gretlite/cli/commands.hpp"
#include "gretlite/cli/corpus.hpp"
#include "gretlite/cli/render.hpp"
#include "gretlite/greql/evaluator.hpp"
#include "gretlite/gretl/parser.hpp"
#include "gretlite/io/graph_format.hpp"
#include "gretlite/io/schema_format.hpp"
#include "gretlite/oracles.hpp"

namespace gretlite::testing {

namespace fs = std::filesystem;

fs::path corpus_dir() { return cli::default_corpus_dir(); }

std::string corpus_text(std::string_view relative) {
  return cli::read_file(corpus_dir() / relative);
}

std::shared_ptr<const Schema> corpus_schema(std::string_view name) {
  static std::map<std::string, std::shared_ptr<const Schema>, std::less<>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto schema = io::load_schema(corpus_text("schemas/" + std::string(name) + ".gls"));
  cache.emplace(std::string(name), schema);
  return schema;
}

Graph corpus_graph(std::string_view file, std::string_view schema) {
  return io::load_graph(corpus_text(file), corpus_schema(schema));
}

greql::Query corpus_query(std::string_view file) {
  return greql::parse_query(corpus_text(file));
}

gretl::Transformation corpus_script(std::string_view file) {
  return gretl::parse_script(corpus_text(file));
}

Value query(const Graph& g, std::string_view text) {
  return greql::evaluate(greql::parse_query(text), g);
}

std::string oracle_rendering(std::string_view task, const Graph& g) {
  if (task == "04") return std::to_string(oracles::count_nodes(g)) + "\n";
  if (task == "05") {
    auto loops = oracles::loops(g);
    std::vector<std::string> ids;
    for (VertexId v : loops) ids.push_back("v" + std::to_string(v.value));
    std::sort(ids.begin(), ids.end());
    std::string out = "(" + std::to_string(loops.size()) + ", {";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + ids[i];
    return out + "})\n";
  }
  if (task == "06") return oracles::isolated_summary(g) + "\n";
  if (task == "07") return oracles::circles_summary(g) + "\n";
  if (task == "08") return oracles::dangling_summary(g) + "\n";
  throw std::invalid_argument("no oracle for task " + std::string(task));
}

Failure check_trace_bijective(const Graph& target,
                              const gretl::TraceabilityMap& trace) {
  const Schema& schema = target.schema();
  std::set<ElementRef> images;
  std::set<std::pair<std::string, std::string>> archetypes;
  for (const auto& e : trace.entries()) {
    if (!target.is_live(e.image)) return "trace image is not live";
    if (!images.insert(e.image).second) return "image registered twice";
    if (!archetypes.emplace(e.class_name, e.archetype.to_string()).second) {
      return "archetype registered twice for " + e.class_name;
    }
    if (trace.image(schema, e.class_name, e.archetype) != e.image) {
      return "img_" + e.class_name + " does not return the registered image";
    }
    auto back = trace.archetype(schema, e.class_name, e.image);
    if (!back || *back != e.archetype) {
      return "arch_" + e.class_name + " is not the inverse of img_" + e.class_name;
    }
    if (target.class_of(e.image).name != e.class_name) {
      return "image class differs from the registration class";
    }
  }
  for (const auto& cls : schema.vertex_classes()) {
    if (trace.img_map(schema, cls.name).size() != trace.arch_map(schema, cls.name).size()) {
      return "img_/arch_ views of " + cls.name + " differ in size";
    }
  }
  return std::nullopt;
}

namespace {

void flatten(const Value& v, std::set<ElementRef>& out) {
  if (auto ref = v.element()) {
    out.insert(*ref);
  } else if (v.is_collection() && !v.is<Map>()) {
    for (const auto& item : v.items()) flatten(item, out);
  }
}

}  // namespace

Failure check_applied_disjoint(const Value& matches,
                               const gretl::MatchReplaceStats& stats) {
  auto items = matches.items();
  if (stats.applied + stats.skipped != items.size()) {
    return "applied + skipped differs from the number of matches";
  }
  if (stats.applied_matches.size() != stats.applied) {
    return "applied match list has the wrong length";
  }
  std::set<ElementRef> used;
  for (std::size_t i : stats.applied_matches) {
    std::set<ElementRef> elements;
    flatten(items[i], elements);
    for (const auto& e : elements) {
      if (!used.insert(e).second) return "two applied matches share an element";
    }
  }
  return std::nullopt;
}

Failure check_round_trip(const Graph& g) {
  std::string first = io::save_graph(g);
  Graph loaded = io::load_graph(first, g.schema_ptr());
  std::string second = io::save_graph(loaded);
  if (first != second) return "save(load(save(G))) differs from save(G)";
  if (canonical_form(loaded) != canonical_form(g)) {
    return "load(save(G)) is not canonically equal to G";
  }
  return std::nullopt;
}

namespace {

bool has_link(const Graph& g, VertexId from, std::string_view cls, VertexId to) {
  for (const Incidence& inc : g.incidences(from)) {
    if (inc.outgoing && g.class_of(inc.edge).name == cls && g.end_of(inc.edge) == to) {
      return true;
    }
  }
  return false;
}

std::vector<VertexId> of_class(const Graph& g, std::string_view cls) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (g.class_of(v).name == cls) out.push_back(v);
  }
  return out;
}

std::int64_t link_degree(const Graph& g, VertexId v) {
  std::int64_t d = 0;
  for (const Incidence& inc : g.incidences(v)) {
    const std::string& n = g.class_of(inc.edge).name;
    d += n == "Edge_LinksToSrc" || n == "Edge_LinksToTrg";
  }
  return d;
}

Value tuple(std::vector<Value> parts) { return Value(Tuple(std::move(parts))); }

std::vector<std::string> sorted_renderings(const Value& collection) {
  std::vector<std::string> out;
  for (const auto& item : collection.items()) out.push_back(item.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Failure check_comprehensions(const Graph& g) {
  auto nodes = of_class(g, "Node");
  auto edges = of_class(g, "Edge_");
  auto name = [&](VertexId v) { return g.get_attribute(v, "name"); };

  {
    Value got = query(g,
        "from n : V{Node}, e : V{Edge_} with e -->{Edge_LinksToSrc} n "
        "reportSet n.name, e end");
    SetBuilder want;
    for (VertexId n : nodes) {
      for (VertexId e : edges) {
        if (has_link(g, e, "Edge_LinksToSrc", n)) want.insert(tuple({name(n), Value(e)}));
      }
    }
    if (got != Value(std::move(want).build())) return "src-link pairs differ";
  }
  {
    Value got = query(g,
        "from x, y : V{Node} with x <--{Edge_LinksToSrc} -->{Edge_LinksToTrg} y "
        "reportSet x, y end");
    SetBuilder want;
    for (VertexId x : nodes) {
      for (VertexId y : nodes) {
        bool linked = std::any_of(edges.begin(), edges.end(), [&](VertexId e) {
          return has_link(g, e, "Edge_LinksToSrc", x) &&
                 has_link(g, e, "Edge_LinksToTrg", y);
        });
        if (linked) want.insert(tuple({Value(x), Value(y)}));
      }
    }
    if (got != Value(std::move(want).build())) return "linked node pairs differ";
  }
  {
    Value got = query(g,
        "from n : V{Node} reportMap n -> degree{Edge_LinksToSrc, Edge_LinksToTrg}(n) end");
    MapBuilder want;
    for (VertexId n : nodes) want.insert(Value(n), Value(link_degree(g, n)));
    if (got != Value(std::move(want).build())) return "degree map differs";
  }
  {
    Value got = query(g,
        "from e : V{Edge_}, n : e -->{Edge_LinksToSrc, Edge_LinksToTrg} "
        "reportList e, n end");
    std::vector<Value> want;
    for (VertexId e : edges) {
      std::vector<VertexId> seen;
      for (const Incidence& inc : g.incidences(e)) {
        if (!inc.outgoing) continue;
        const std::string& cls = g.class_of(inc.edge).name;
        if (cls != "Edge_LinksToSrc" && cls != "Edge_LinksToTrg") continue;
        VertexId n = g.end_of(inc.edge);
        if (std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
        seen.push_back(n);
        want.push_back(tuple({Value(e), Value(n)}));
      }
    }
    if (!got.is<List>() ||
        sorted_renderings(got) != sorted_renderings(Value(List(want)))) {
      return "dependent-domain list differs";
    }
  }
  {
    Value got = query(g,
        "count(from n : V{Node} with degree{Edge_LinksToSrc, Edge_LinksToTrg}(n) % 2 = 0 "
        "or n.name = \"n1\" reportSet n end)");
    std::int64_t want = 0;
    for (VertexId n : nodes) {
      want += link_degree(g, n) % 2 == 0 || name(n) == Value("n1");
    }
    if (got != Value(want)) return "filtered count differs";
  }
  {
    Value got = query(g,
        "from n : V{Node} reportSet n <--{Edge_LinksToTrg} <--{Graph_ContainsEdges} end");
    SetBuilder want;
    for (VertexId n : nodes) {
      SetBuilder reached;
      for (VertexId e : edges) {
        if (!has_link(g, e, "Edge_LinksToTrg", n)) continue;
        for (VertexId root : of_class(g, "Graph_")) {
          if (has_link(g, root, "Graph_ContainsEdges", e)) reached.insert(Value(root));
        }
      }
      want.insert(Value(std::move(reached).build()));
    }
    if (got != Value(std::move(want).build())) return "two-step backward paths differ";
  }
  return std::nullopt;
}

Failure check_source_isolation(const Graph& source,
                               const gretl::Transformation& script,
                               std::shared_ptr<const Schema> target_schema) {
  std::string before = io::save_graph(source);
  std::uint64_t version = source.version();
  gretl::execute(script, &source, std::move(target_schema), false);
  if (io::save_graph(source) != before) return "source serialization changed";
  if (source.version() != version) return "source version changed";
  return std::nullopt;
}

Failure check_corpus_determinism() {
  fs::path scratch = fs::temp_directory_path() /
                     ("gretlite-determinism-" + std::to_string(::getpid()));
  fs::remove_all(scratch);
  std::vector<std::string> reports;
  std::vector<std::map<std::string, std::string>> outputs;
  for (const char* run : {"a", "b"}) {
    fs::path dir = scratch / run;
    fs::create_directories(dir);
    fs::copy(corpus_dir(), dir, fs::copy_options::recursive);
    cli::CorpusArgs args;
    args.dir = dir;
    args.update_goldens = true;
    std::ostringstream out;
    std::ostringstream err;
    if (cli::cmd_corpus(args, out, err) != 0) {
      fs::remove_all(scratch);
      return "corpus run failed: " + out.str() + err.str();
    }
    reports.push_back(out.str());
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir / "expected")) {
      files.emplace(entry.path().filename().string(), cli::read_file(entry.path()));
    }
    outputs.push_back(std::move(files));
  }
  fs::remove_all(scratch);
  if (reports[0] != reports[1]) return "corpus reports differ between runs";
  if (outputs[0] != outputs[1]) return "corpus outputs differ between runs";
  return std::nullopt;
}

}  // namespace gretlite::testing

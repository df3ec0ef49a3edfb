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

#include "gretlite/cli/corpus.hpp"

#include <json.hpp>
#include <unordered_map>

#include "gretlite/cli/commands.hpp"
#include "gretlite/cli/render.hpp"
#include "gretlite/greql/evaluator.hpp"
#include "gretlite/greql/parser.hpp"
#include "gretlite/gretl/engine.hpp"
#include "gretlite/gretl/parser.hpp"
#include "gretlite/io/graph_format.hpp"
#include "gretlite/io/schema_format.hpp"
#include "gretlite/oracles.hpp"

namespace gretlite::cli {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path default_corpus_dir() { return fs::path(GRETLITE_CORPUS_DIR); }

namespace {

struct Output {
  fs::path golden;
  std::string actual;
};

std::string field(const json& entry, const char* key) {
  if (!entry.contains(key) || !entry[key].is_string()) {
    throw Error(ErrorCode::kIo,
                "task manifest entry lacks string field '" + std::string(key) + "'");
  }
  return entry[key].get<std::string>();
}

std::optional<std::string> optional_field(const json& entry, const char* key) {
  if (!entry.contains(key)) return std::nullopt;
  return field(entry, key);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// "FILE:LINE: expected `a`, got `b`" for the first differing line.
std::optional<std::string> first_difference(const fs::path& golden,
                                            const std::string& expected,
                                            const std::string& actual) {
  if (expected == actual) return std::nullopt;
  auto want = lines_of(expected);
  auto got = lines_of(actual);
  std::size_t n = std::max(want.size(), got.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::string w = i < want.size() ? "`" + want[i] + "`" : "end of file";
    std::string g = i < got.size() ? "`" + got[i] + "`" : "end of output";
    if (w != g) {
      return golden.string() + ":" + std::to_string(i + 1) + ": expected " + w +
             ", got " + g;
    }
  }
  return golden.string() + ": differs in line endings";
}

class TaskRunner {
 public:
  TaskRunner(const fs::path& dir, const json& entry) : dir_(dir), entry_(entry) {}

  // Produces the outputs and returns the oracle's verdict.
  std::optional<std::string> run(std::vector<Output>& outputs) {
    std::string kind = field(entry_, "kind");
    if (kind == "query") return run_query(outputs);
    if (kind == "transform") return run_transform(outputs);
    throw Error(ErrorCode::kIo, "unknown task kind '" + kind + "'");
  }

 private:
  fs::path path(const char* key) const { return dir_ / field(entry_, key); }

  std::shared_ptr<const Schema> schema(const char* key) {
    fs::path p = path(key);
    auto it = schemas_.find(p.string());
    if (it != schemas_.end()) return it->second;
    auto s = io::load_schema(read_file(p));
    schemas_.emplace(p.string(), s);
    return s;
  }

  std::optional<std::string> run_query(std::vector<Output>& outputs) {
    auto s = schema("schema");
    Graph graph = io::load_graph(read_file(path("graph")), s);
    greql::Query q = greql::parse_query(read_file(path("query")));
    std::string actual = render_result(greql::evaluate(q, graph));
    outputs.push_back({path("expected"), actual});

    auto oracle = optional_field(entry_, "oracle");
    if (!oracle) return std::nullopt;
    std::string want;
    if (*oracle == "count-nodes") {
      want = render_result(Value(static_cast<std::int64_t>(oracles::count_nodes(graph))));
    } else if (*oracle == "loops") {
      auto loops = oracles::loops(graph);
      SetBuilder set;
      for (VertexId v : loops) set.insert(Value(v));
      want = render_result(Value(Tuple(std::vector<Value>{
          Value(static_cast<std::int64_t>(loops.size())),
          Value(std::move(set).build())})));
    } else if (*oracle == "isolated") {
      want = render_result(Value(oracles::isolated_summary(graph)));
    } else if (*oracle == "circles") {
      want = render_result(Value(oracles::circles_summary(graph)));
    } else if (*oracle == "dangling") {
      want = render_result(Value(oracles::dangling_summary(graph)));
    } else {
      throw Error(ErrorCode::kIo, "unknown oracle '" + *oracle + "'");
    }
    if (want != actual) {
      return "oracle expected " + want.substr(0, want.size() - 1) + ", got " +
             actual.substr(0, actual.size() - 1);
    }
    return std::nullopt;
  }

  std::optional<std::string> run_transform(std::vector<Output>& outputs) {
    bool in_place = entry_.value("in_place", false);
    auto script = gretl::parse_script(read_file(path("script")));
    std::optional<Graph> source;
    std::shared_ptr<const Schema> source_schema;
    if (entry_.contains("source")) {
      source_schema = schema("source_schema");
      source = io::load_graph(read_file(path("source")), source_schema);
    }
    auto target_schema = entry_.contains("target_schema") ? schema("target_schema")
                                                         : source_schema;
    gretl::ExecutionResult result = gretl::execute(
        script, source ? &*source : nullptr, target_schema, in_place);
    outputs.push_back({path("expected"), io::save_graph(result.graph)});
    if (entry_.contains("expected_trace")) {
      outputs.push_back(
          {path("expected_trace"), render_trace(result.graph, result.trace)});
    }

    auto oracle = optional_field(entry_, "oracle");
    if (!oracle) return std::nullopt;
    if (!source) throw Error(ErrorCode::kIo, "oracle '" + *oracle + "' needs a source");
    const Graph& before = *source;
    const Graph& after = result.graph;

    std::unordered_map<Value, ElementRef, ValueHash> images;
    for (const auto& e : result.trace.entries()) images.emplace(e.archetype, e.image);
    oracles::ImageOf image = [&](const ElementRef& ref) -> std::optional<ElementRef> {
      auto it = images.find(Value(ref));
      if (it == images.end()) return std::nullopt;
      return it->second;
    };

    if (*oracle == "reverse") return oracles::check_reversed(before, after);
    if (*oracle == "migration") return oracles::check_migration(before, after, image);
    if (*oracle == "topology") return oracles::check_topology(before, after, image);
    if (*oracle == "delete-n1" || *oracle == "delete-n1-edges") {
      auto want = oracles::expected_deletion(before, "n1", *oracle == "delete-n1-edges");
      if (oracles::removed_elements(before, after) != want) {
        return std::string("deleted elements differ from the reachability oracle");
      }
      if (!oracles::incidences_consistent(after)) {
        return std::string("dangling incidences after deletion");
      }
      return std::nullopt;
    }
    if (*oracle == "one-step") {
      if (oracles::link_pairs(after) != oracles::one_step_closure(before)) {
        return std::string("links differ from the one-step composition oracle");
      }
      return std::nullopt;
    }
    throw Error(ErrorCode::kIo, "unknown oracle '" + *oracle + "'");
  }

  fs::path dir_;
  const json& entry_;
  std::unordered_map<std::string, std::shared_ptr<const Schema>> schemas_;
};

TaskOutcome run_task(const CorpusArgs& args, const json& entry) {
  TaskOutcome outcome;
  outcome.id = entry.value("id", 0);
  outcome.name = entry.value("name", std::string());
  try {
    std::vector<Output> outputs;
    TaskRunner runner(args.dir, entry);
    if (auto verdict = runner.run(outputs)) {
      outcome.detail = *verdict;
      return outcome;
    }
    for (const auto& o : outputs) {
      if (args.update_goldens) {
        write_file_atomic(o.golden, o.actual);
        continue;
      }
      if (auto diff = first_difference(o.golden, read_file(o.golden), o.actual)) {
        outcome.detail = *diff;
        return outcome;
      }
    }
    outcome.passed = true;
  } catch (const Error& e) {
    outcome.detail = "error [" + std::string(to_string(e.code())) + "]: " + e.what();
  }
  return outcome;
}

}  // namespace

std::vector<TaskOutcome> run_corpus(const CorpusArgs& args) {
  json manifest;
  try {
    manifest = json::parse(read_file(args.dir / "tasks.json"));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIo, "malformed task manifest: " + std::string(e.what()));
  }
  std::vector<TaskOutcome> out;
  bool found = false;
  for (const auto& entry : manifest.at("tasks")) {
    if (args.task && entry.value("id", 0) != *args.task) continue;
    found = true;
    out.push_back(run_task(args, entry));
  }
  if (args.task && !found) {
    throw Error(ErrorCode::kIo, "no task " + std::to_string(*args.task) +
                                    " in the manifest");
  }
  return out;
}

int cmd_corpus(const CorpusArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto outcomes = run_corpus(args);
    std::size_t passed = 0;
    for (const auto& o : outcomes) {
      out << "Task " << o.id << " " << o.name << ": "
          << (o.passed ? "PASS" : "FAIL");
      if (!o.passed) out << " (" << o.detail << ")";
      out << "\n";
      passed += o.passed;
    }
    out << passed << "/" << outcomes.size() << " PASS\n";
    return passed == outcomes.size() ? kExitOk : kExitUserError;
  });
}

}  // namespace gretlite::cli

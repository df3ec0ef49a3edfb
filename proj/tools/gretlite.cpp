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

// Command-line driver: `gretlite query|transform|corpus ...`.

#include <CLI11.hpp>
#include <iostream>

#include "gretlite/cli/commands.hpp"
#include "gretlite/cli/corpus.hpp"

namespace cli = gretlite::cli;

int main(int argc, char** argv) {
  CLI::App app{"gretlite: graph queries and transformations"};
  app.require_subcommand(1);

  cli::QueryArgs query;
  auto* q = app.add_subcommand("query", "Evaluate a query and print the result");
  q->add_option("schema", query.schema, "Schema file (.gls)")->required();
  q->add_option("graph", query.graph, "Graph file (.glg)")->required();
  q->add_option("query", query.query, "Query file (.grq)")->required();

  cli::TransformArgs transform;
  std::string source;
  std::string source_schema;
  std::string trace;
  std::string dot;
  auto* t = app.add_subcommand("transform", "Run a transformation script");
  t->add_option("script", transform.script, "Script file (.grt)")->required();
  t->add_option("target_schema", transform.target_schema,
                "Schema of the output graph")
      ->required();
  t->add_option("--source", source, "Source graph (.glg)");
  t->add_option("--source-schema", source_schema,
                "Schema of the source graph (default: the target schema)");
  t->add_flag("--in-place", transform.in_place,
              "Rewrite the source graph instead of building a new one");
  t->add_option("--out", transform.out, "Output graph file")->required();
  t->add_option("--trace", trace, "Write the traceability report here");
  t->add_option("--dot", dot, "Write a DOT rendering here");

  cli::CorpusArgs corpus;
  int task = 0;
  std::string corpus_dir;
  auto* c = app.add_subcommand("corpus", "Run the bundled task corpus");
  c->add_option("--task", task, "Run only this task id")->check(CLI::Range(1, 14));
  c->add_option("--corpus-dir", corpus_dir, "Corpus directory");
  c->add_flag("--update-goldens", corpus.update_goldens,
              "Rewrite golden files from oracle-checked outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUserError;
  }

  if (q->parsed()) return cli::cmd_query(query, std::cout, std::cerr);
  if (t->parsed()) {
    if (!source.empty()) transform.source = source;
    if (!source_schema.empty()) transform.source_schema = source_schema;
    if (!trace.empty()) transform.trace = trace;
    if (!dot.empty()) transform.dot = dot;
    return cli::cmd_transform(transform, std::cout, std::cerr);
  }
  if (c->count("--task") > 0) corpus.task = task;
  if (!corpus_dir.empty()) corpus.dir = corpus_dir;
  return cli::cmd_corpus(corpus, std::cout, std::cerr);
}

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

#include "gretlite/cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "gretlite/cli/render.hpp"
#include "gretlite/greql/evaluator.hpp"
#include "gretlite/greql/parser.hpp"
#include "gretlite/gretl/engine.hpp"
#include "gretlite/gretl/parser.hpp"
#include "gretlite/io/dot.hpp"
#include "gretlite/io/graph_format.hpp"
#include "gretlite/io/schema_format.hpp"

namespace gretlite::cli {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return buf.str();
}

void write_file_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
    }
    out << text;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  }
}

namespace {

// Prefixes errors from a file's contents with the file name.
template <typename F>
auto in_file(const fs::path& path, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ":" + e.what());
  }
}

}  // namespace

int cmd_query(const QueryArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto schema_text = read_file(args.schema);
    auto graph_text = read_file(args.graph);
    auto query_text = read_file(args.query);
    auto schema = in_file(args.schema, [&] { return io::load_schema(schema_text); });
    Graph graph = in_file(args.graph, [&] { return io::load_graph(graph_text, schema); });
    greql::Query query = in_file(args.query, [&] { return greql::parse_query(query_text); });
    Value result = in_file(args.query, [&] { return greql::evaluate(query, graph); });
    out << render_result(result);
    return kExitOk;
  });
}

int cmd_transform(const TransformArgs& args, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    if (args.in_place && !args.source) {
      err << "usage error: --in-place requires --source\n";
      return kExitUserError;
    }
    auto script_text = read_file(args.script);
    auto schema_text = read_file(args.target_schema);
    auto target_schema =
        in_file(args.target_schema, [&] { return io::load_schema(schema_text); });
    auto script = in_file(args.script, [&] { return gretl::parse_script(script_text); });

    std::optional<Graph> source;
    if (args.source) {
      std::shared_ptr<const Schema> source_schema = target_schema;
      if (args.source_schema) {
        auto text = read_file(*args.source_schema);
        source_schema =
            in_file(*args.source_schema, [&] { return io::load_schema(text); });
      }
      auto graph_text = read_file(*args.source);
      source = in_file(*args.source,
                       [&] { return io::load_graph(graph_text, source_schema); });
    }

    gretl::ExecutionResult result = in_file(args.script, [&] {
      return gretl::execute(script, source ? &*source : nullptr, target_schema,
                            args.in_place);
    });

    // Render everything first so a failure leaves no partial outputs.
    std::string graph_text = io::save_graph(result.graph);
    std::optional<std::string> trace_text;
    std::optional<std::string> dot_text;
    if (args.trace) trace_text = render_trace(result.graph, result.trace);
    if (args.dot) dot_text = io::export_dot(result.graph);
    write_file_atomic(args.out, graph_text);
    if (trace_text) write_file_atomic(*args.trace, *trace_text);
    if (dot_text) write_file_atomic(*args.dot, *dot_text);
    out << "wrote " << args.out.string() << " (" << result.graph.vertex_count()
        << " vertices, " << result.graph.edge_count() << " edges)\n";
    return kExitOk;
  });
}

}  // namespace gretlite::cli

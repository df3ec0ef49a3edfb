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

#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "gretlite/error.hpp"

namespace gretlite::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitInternal = 2;

struct QueryArgs {
  std::filesystem::path schema;
  std::filesystem::path graph;
  std::filesystem::path query;
};

struct TransformArgs {
  std::filesystem::path script;
  std::filesystem::path target_schema;
  std::optional<std::filesystem::path> source;
  // Schema of --source; defaults to the target schema.
  std::optional<std::filesystem::path> source_schema;
  bool in_place = false;
  std::filesystem::path out;
  std::optional<std::filesystem::path> trace;
  std::optional<std::filesystem::path> dot;
};

int cmd_query(const QueryArgs& args, std::ostream& out, std::ostream& err);
int cmd_transform(const TransformArgs& args, std::ostream& out,
                  std::ostream& err);

// Throws Error(kIo) naming the path.
std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& text);

// Runs `body` and maps its failures to exit codes, reporting on `err`.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace gretlite::cli

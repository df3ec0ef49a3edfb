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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gretlite::cli {

std::filesystem::path default_corpus_dir();

struct CorpusArgs {
  std::optional<int> task;
  std::filesystem::path dir = default_corpus_dir();
  // Rewrite golden files from the current outputs. A task whose oracle
  // rejects the output is reported as failing and its goldens are kept.
  bool update_goldens = false;
};

struct TaskOutcome {
  int id = 0;
  std::string name;
  bool passed = false;
  // Failure reason, e.g. the first differing golden line.
  std::string detail;
};

// Runs the tasks listed in DIR/tasks.json (or only `task`).
std::vector<TaskOutcome> run_corpus(const CorpusArgs& args);

// Prints one PASS/FAIL line per task and a summary; exit 0 iff all pass.
int cmd_corpus(const CorpusArgs& args, std::ostream& out, std::ostream& err);

}  // namespace gretlite::cli

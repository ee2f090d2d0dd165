// Copyright 2026 The Tieup Authors.
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

#ifndef TIEUP_RUNNER_H_
#define TIEUP_RUNNER_H_

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "tieup/pipeline.h"
#include "tieup/templates.h"
#include "tieup/token.h"

namespace tieup {

// Paths and switches for one extraction run. Empty optional paths select
// built-in defaults (no designators, no concept keywords, identity concept
// map, default discourse configuration).
struct RunConfig {
  std::string corpus;            // a .tok file or a directory of them
  std::string patterns;          // required
  std::string out;               // output directory, created if missing
  std::string concepts;          // optional
  std::string designators;       // optional
  std::string concept_map;       // optional
  std::string discourse_config;  // optional
  std::vector<std::string> dumps;
  int jobs = 1;
  bool discourse = true;
};

// Turns a `key = value` configuration file (`#` comments) into the
// equivalent `--key value` arguments. A value of true/false stands for a
// bare flag; `dump` takes a whitespace-separated list of stages. Throws
// std::runtime_error naming the path and line.
std::vector<std::string> ConfigFileArgs(const std::filesystem::path &path);

// Reads a whole file; throws std::runtime_error naming the path.
std::string ReadFile(const std::filesystem::path &path);

// Writes through a temporary sibling and renames it into place.
void WriteFileAtomically(const std::filesystem::path &path,
                         const std::string &contents);

// Loads every resource named by `config`. Errors carry the path and, for
// malformed files, the line number.
Resources LoadResources(const RunConfig &config);

// All documents of a .tok file or of every .tok file in a directory (sorted
// by file name). Duplicate document ids are an error.
std::vector<Document> LoadCorpus(const std::filesystem::path &path);

// All template graphs of a .tpl file or directory, keyed by document id.
std::map<std::string, TemplateGraph> LoadTemplates(
    const std::filesystem::path &path);

// Returns the process exit status. Diagnostics and timings go to `log`.
int RunExtract(const RunConfig &config, std::ostream &log);

// Prints the score report to `out`; warnings go to `log`.
int RunScore(const std::string &response_path, const std::string &key_path,
             std::ostream &out, std::ostream &log);

}  // namespace tieup

#endif  // TIEUP_RUNNER_H_

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

// Command-line front end: `tieup extract` runs the extraction pipeline over a
// token corpus and `tieup score` scores response templates against keys.

#include <exception>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "tieup/pipeline.h"
#include "tieup/runner.h"

namespace {

// Splices the arguments of every `--config FILE` given to `extract` in front
// of the command-line ones, so that explicit flags (parsed last) win.
std::vector<std::string> ExpandConfig(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] != "extract") return args;
  std::vector<std::string> from_file, rest;
  for (size_t i = 1; i < args.size(); ++i) {
    std::string_view arg = args[i];
    std::string path;
    if (arg == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (arg.starts_with("--config=")) {
      path = std::string(arg.substr(9));
    } else {
      rest.push_back(args[i]);
      continue;
    }
    std::vector<std::string> more = tieup::ConfigFileArgs(path);
    from_file.insert(from_file.end(), more.begin(), more.end());
  }
  std::vector<std::string> out = {"extract"};
  out.insert(out.end(), from_file.begin(), from_file.end());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  std::vector<std::string> args;
  try {
    args = ExpandConfig(argc, argv);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Extracts corporate tie-up templates and scores them."};
  app.require_subcommand(1);

  tieup::RunConfig config;
  bool no_discourse = false;
  CLI::App *extract =
      app.add_subcommand("extract", "Extract templates from a token corpus");
  // Consumed by ExpandConfig; declared for --help.
  std::string config_path;
  extract->add_option("--config", config_path,
                      "key = value file of defaults for these flags");
  extract->add_option("--corpus", config.corpus, ".tok file or directory")
      ->required();
  extract->add_option("--patterns", config.patterns, "Pattern rule file")
      ->required();
  extract->add_option("--out", config.out, "Output directory")->required();
  extract->add_option("--concepts", config.concepts, "Concept lexicon");
  extract->add_option("--designators", config.designators,
                      "Designator lexicon");
  extract->add_option("--concept-map", config.concept_map,
                      "Rule group to concept label map");
  extract->add_option("--discourse-config", config.discourse_config,
                      "Pronoun and subject-marker configuration");
  extract
      ->add_option("--dump", config.dumps, "Write a diagnostic stage dump")
      ->check(CLI::IsMember(tieup::DumpStages()));
  extract->add_option("--jobs", config.jobs, "Documents processed in parallel")
      ->check(CLI::PositiveNumber);
  extract->add_flag("--no-discourse", no_discourse,
                    "Skip discourse processing (one tie-up per match)");

  std::string response, key;
  CLI::App *score =
      app.add_subcommand("score", "Score response templates against keys");
  score->add_option("--response", response, ".tpl file or directory")
      ->required();
  score->add_option("--key", key, ".tpl file or directory")->required();

  for (CLI::Option *option : extract->get_options()) {
    if (option->get_name() != "--dump") {
      option->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }
  }

  // CLI11 expects the arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  if (*extract) {
    config.discourse = !no_discourse;
    return tieup::RunExtract(config, std::clog);
  }
  return tieup::RunScore(response, key, std::cout, std::clog);
}

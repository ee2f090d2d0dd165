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

#include "tieup/runner.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tieup/error.h"
#include "tieup/scorer.h"
#include "tieup/utf8.h"

namespace tieup {

namespace fs = std::filesystem;

namespace {

// Runs `parse` over the file contents, prefixing errors with the path.
template <typename Parser>
auto ParseFile(const fs::path &path, Parser parse) {
  std::string text = ReadFile(path);
  try {
    return parse(text);
  } catch (const std::exception &e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::vector<fs::path> FilesWithExtension(const fs::path &path,
                                         const std::string &extension) {
  if (!fs::exists(path)) {
    throw std::runtime_error(path.string() + ": no such file or directory");
  }
  if (!fs::is_directory(path)) return {path};
  std::vector<fs::path> files;
  for (const fs::directory_entry &entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

std::vector<std::string> ConfigFileArgs(const fs::path &path) {
  std::vector<std::string> args;
  std::istringstream in(ReadFile(path));
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    size_t eq = text.find('=');
    std::string_view key = Trim(text.substr(0, std::min(eq, text.size())));
    if (eq == std::string_view::npos || key.empty()) {
      throw std::runtime_error(path.string() + ": " +
                               ParseError("expected 'key = value'", line_no)
                                   .what());
    }
    std::string_view value = Trim(text.substr(eq + 1));
    std::string flag = "--" + std::string(key);
    if (value == "true") {
      args.push_back(flag);
    } else if (key == "dump") {
      for (const std::string &stage : SplitWhitespace(value)) {
        args.push_back(flag);
        args.push_back(stage);
      }
    } else if (value != "false") {
      args.push_back(flag);
      args.push_back(std::string(value));
    }
  }
  return args;
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) throw std::runtime_error(path.string() + ": read error");
  return contents.str();
}

void WriteFileAtomically(const fs::path &path, const std::string &contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot open file");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error(tmp.string() + ": write error");
  }
  fs::rename(tmp, path);
}

Resources LoadResources(const RunConfig &config) {
  Resources resources;
  if (config.patterns.empty()) {
    throw std::runtime_error("no pattern file given");
  }
  resources.patterns = ParseFile(config.patterns, ParsePatternFile);
  if (!config.concept_map.empty()) {
    ApplyConceptMap(ParseFile(config.concept_map, ParseConceptMap),
                    resources.patterns);
  }
  if (!config.concepts.empty()) {
    resources.concepts = ParseFile(config.concepts, ParseConceptLexicon);
  }
  if (!config.designators.empty()) {
    resources.designators =
        ParseFile(config.designators, ParseDesignatorLexicon);
  }
  if (!config.discourse_config.empty()) {
    resources.discourse =
        ParseFile(config.discourse_config, ParseDiscourseConfig);
  }
  return resources;
}

std::vector<Document> LoadCorpus(const fs::path &path) {
  std::vector<Document> docs;
  std::set<std::string> ids;
  for (const fs::path &file : FilesWithExtension(path, ".tok")) {
    for (Document &doc : ParseFile(file, ParseTokenFile)) {
      if (!ids.insert(doc.doc_id).second) {
        throw std::runtime_error(file.string() + ": duplicate document id '" +
                                 doc.doc_id + "'");
      }
      docs.push_back(std::move(doc));
    }
  }
  return docs;
}

std::map<std::string, TemplateGraph> LoadTemplates(const fs::path &path) {
  std::map<std::string, TemplateGraph> graphs;
  for (const fs::path &file : FilesWithExtension(path, ".tpl")) {
    for (TemplateGraph &graph : ParseFile(file, ParseTemplateFile)) {
      std::string id = graph.doc_id;
      if (!graphs.emplace(id, std::move(graph)).second) {
        throw std::runtime_error(file.string() + ": duplicate document id '" +
                                 id + "'");
      }
    }
  }
  return graphs;
}

int RunExtract(const RunConfig &config, std::ostream &log) {
  Resources resources;
  std::vector<Document> docs;
  try {
    for (const std::string &stage : config.dumps) {
      const auto &stages = DumpStages();
      if (std::find(stages.begin(), stages.end(), stage) == stages.end()) {
        throw std::runtime_error("unknown dump stage '" + stage + "'");
      }
    }
    if (config.corpus.empty()) throw std::runtime_error("no corpus given");
    if (config.out.empty()) throw std::runtime_error("no output directory");
    resources = LoadResources(config);
    docs = LoadCorpus(config.corpus);
    fs::create_directories(config.out);
  } catch (const std::exception &e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }

  PipelineOptions options;
  options.discourse = config.discourse;
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex log_mutex;
  auto worker = [&] {
    for (size_t i = next++; i < docs.size(); i = next++) {
      const Document &doc = docs[i];
      try {
        auto start = std::chrono::steady_clock::now();
        DocumentResult result = ProcessDocument(doc, resources, options);
        fs::path out_dir(config.out);
        WriteFileAtomically(out_dir / (doc.doc_id + ".tpl"),
                            SerializeTemplates(result.graph));
        for (const std::string &stage : config.dumps) {
          WriteFileAtomically(out_dir / (doc.doc_id + "." + stage + ".txt"),
                              DumpStage(result, stage));
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::lock_guard<std::mutex> lock(log_mutex);
        log << doc.doc_id << ": "
            << result.graph.OfType(kTieUpType).size() << " tie-up(s), " << ms
            << " ms\n";
      } catch (const std::exception &e) {
        failed = true;
        std::lock_guard<std::mutex> lock(log_mutex);
        log << "error: " << doc.doc_id << ": " << e.what() << "\n";
      }
    }
  };
  int jobs = std::max(1, config.jobs);
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (std::thread &t : threads) t.join();
  return failed ? 1 : 0;
}

int RunScore(const std::string &response_path, const std::string &key_path,
             std::ostream &out, std::ostream &log) {
  std::map<std::string, TemplateGraph> responses, keys;
  try {
    responses = LoadTemplates(response_path);
    keys = LoadTemplates(key_path);
  } catch (const std::exception &e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
  std::set<std::string> ids;
  for (const auto &[id, graph] : keys) ids.insert(id);
  for (const auto &[id, graph] : responses) ids.insert(id);

  std::vector<std::pair<std::string, ScoreResult>> documents;
  for (const std::string &id : ids) {
    TemplateGraph empty;
    empty.doc_id = id;
    auto response = responses.find(id);
    auto key = keys.find(id);
    if (response == responses.end()) {
      log << "warning: no response for document '" << id
          << "'; its key fills count as missing\n";
    }
    if (key == keys.end()) {
      log << "warning: no key for document '" << id
          << "'; its response fills count as spurious\n";
    }
    documents.emplace_back(
        id, AlignAndCount(response == responses.end() ? empty : response->second,
                          key == keys.end() ? empty : key->second));
  }
  out << FormatScoreReport(documents);
  return 0;
}

}  // namespace tieup

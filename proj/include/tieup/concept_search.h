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

#ifndef TIEUP_CONCEPT_SEARCH_H_
#define TIEUP_CONCEPT_SEARCH_H_

#include <string>
#include <string_view>
#include <vector>

#include "tieup/token.h"

namespace tieup {

// A keyword with optional word-boundary anchors: ">kw" must begin a word,
// "kw<" must end one, ">kw<" must be the whole word.
struct Keyword {
  std::string text;
  bool anchor_begin = false;
  bool anchor_end = false;

  bool operator==(const Keyword &other) const = default;

  // Lexicon spelling, anchors included.
  std::string ToString() const;
  bool Matches(std::string_view word) const;
};

struct ConceptEntry {
  std::string name;
  std::vector<Keyword> keywords;
};

class ConceptLexicon {
 public:
  // Throws std::invalid_argument if the name is taken or keywords are empty.
  void Add(ConceptEntry entry);

  const std::vector<ConceptEntry> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<ConceptEntry> entries_;
};

// One `(NAME kw kw ...)` per line; `#` comment lines.
ConceptLexicon ParseConceptLexicon(std::string_view text);

// A maximal run of noun-like tokens, or a single other token.
struct CompoundRun {
  std::string text;
  int start = 0;  // tok_index of the first member
  int count = 0;

  bool operator==(const CompoundRun &other) const = default;
};

std::vector<CompoundRun> CompoundRuns(const Sentence &sentence);

struct ConceptHit {
  std::string concept_name;
  int sent_index = 0;
  std::string matched_run;
  int run_start = 0;
  std::string keyword;  // lexicon spelling

  bool operator==(const ConceptHit &other) const = default;
};

// Reports each (concept, run) pair at most once, keyed by the first matching
// keyword in lexicon order.
std::vector<ConceptHit> FindConcepts(const Sentence &sentence,
                                     const ConceptLexicon &lexicon);

}  // namespace tieup

#endif  // TIEUP_CONCEPT_SEARCH_H_

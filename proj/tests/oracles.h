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

// Independent reference implementations and random generators used by the
// unit tests and the acceptance suite. Nothing here calls the code under
// test except to build inputs.

#ifndef TIEUP_TESTS_ORACLES_H_
#define TIEUP_TESTS_ORACLES_H_

#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tieup/concept_search.h"
#include "tieup/discourse.h"
#include "tieup/pattern.h"
#include "tieup/scorer.h"
#include "tieup/templates.h"
#include "tieup/token.h"

namespace tieup::testing {

// "田辺製薬/company は/particle ..." -> tokens of sentence `sent`.
Sentence MakeSentence(const std::string &tagged, int sent = 0);
Document MakeDocument(const std::string &id,
                      const std::vector<std::string> &tagged_sentences);

// Longest common subsequence by enumerating every subsequence of the shorter
// string and testing it against the longer one. Strings of <= 16 characters.
int BruteForceLcs(const std::u32string &a, const std::u32string &b);

// Match identity: (rule name, element spans as (begin, end) pairs).
using MatchKey = std::tuple<std::string, std::vector<std::pair<int, int>>>;

// Enumerates every non-decreasing boundary vector b0 <= ... <= bm over the
// sentence and keeps those whose element spans satisfy the rule.
std::set<MatchKey> BruteForceMatches(const Sentence &sentence,
                                     const std::vector<PatternRule> &rules);
std::set<MatchKey> MatchKeys(const std::vector<PatternMatch> &matches);

// Re-checks one element against a span without the engine's predicates.
bool ElementHolds(const PatternElement &element, const Sentence &sentence,
                  int begin, int end);

// Hit identity: (concept, run start, run text, keyword spelling).
using HitKey = std::tuple<std::string, int, std::string, std::string>;

// Scans every contiguous span, keeps the maximal noun-like runs (and single
// other tokens), and tests each keyword by plain substring search.
std::set<HitKey> BruteForceConcepts(const Sentence &sentence,
                                    const ConceptLexicon &lexicon);
std::set<HitKey> HitKeys(const std::vector<ConceptHit> &hits);

// The abbreviation scan written directly from its pseudocode, without the
// alias-linking pass. Returns the final ids.
std::vector<int> LiteralAbbreviationScan(
    const std::vector<std::string> &strings, const std::vector<bool> &eg);

// Highest total of correct fills over every one-to-one alignment of objects
// of equal type (<= 4 objects per type on each side).
int64_t ExhaustiveBestCorrect(const TemplateGraph &response,
                              const TemplateGraph &key);

// Random inputs.
Sentence RandomSentence(std::mt19937 &rng, int max_tokens);
PatternRule RandomRule(std::mt19937 &rng, int index, int max_elements);
ConceptLexicon RandomConceptLexicon(std::mt19937 &rng);
CompanyRegistry RandomRegistry(std::mt19937 &rng, int max_entries);
TemplateGraph RandomGraph(std::mt19937 &rng, const std::string &doc_id);
ScoreCounts RandomCounts(std::mt19937 &rng, int max_count);

}  // namespace tieup::testing

#endif  // TIEUP_TESTS_ORACLES_H_

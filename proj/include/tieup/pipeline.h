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

#ifndef TIEUP_PIPELINE_H_
#define TIEUP_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "tieup/concept_search.h"
#include "tieup/discourse.h"
#include "tieup/pattern.h"
#include "tieup/templates.h"
#include "tieup/token.h"

namespace tieup {

// Everything the extractor reads besides the corpus.
struct Resources {
  DesignatorLexicon designators;
  ConceptLexicon concepts;
  std::vector<PatternRule> patterns;  // concept map already applied
  DiscourseConfig discourse;
  TemplateOptions templates;
};

struct PipelineOptions {
  // When false, no reference unification, pronoun resolution or
  // segmentation: each best tie-up match becomes its own tie-up.
  bool discourse = true;
  MatchOptions match;
};

// Intermediate state of one document, kept for diagnostics.
struct DocumentResult {
  Document doc;  // after name recognition and grouping
  std::vector<ConceptHit> hits;
  std::vector<PatternMatch> matches;
  std::vector<PatternMatch> best_matches;
  CompanyRegistry registry;
  TopicState topics;
  std::vector<ConceptInstance> concepts;
  std::vector<DiscourseSegment> segments;
  std::vector<PronounReference> pronouns;
  std::vector<TieUpCluster> clusters;
  TemplateGraph graph;
};

DocumentResult ProcessDocument(const Document &doc, const Resources &resources,
                               const PipelineOptions &options = {});

// Diagnostic stages: matches, concepts, registry, topics, pronouns,
// segments.
const std::vector<std::string> &DumpStages();
std::string DumpStage(const DocumentResult &result, std::string_view stage);

}  // namespace tieup

#endif  // TIEUP_PIPELINE_H_

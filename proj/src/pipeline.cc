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

#include "tieup/pipeline.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tieup {

namespace {

std::string SpanText(const Sentence &sentence, const Span &span) {
  std::string text;
  for (int t = span.begin; t < span.end; ++t) text += sentence[t].surface;
  return text;
}

std::string IdNames(const IdSet &ids, const CompanyRegistry &registry) {
  std::string out = "{";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += registry.CanonicalName(ids[i]);
  }
  return out + "}";
}

// Pattern instances first, then one instance per keyword concept per
// sentence; sentence order throughout.
std::vector<ConceptInstance> CollectConcepts(
    const Document &doc, const std::vector<PatternMatch> &best,
    const std::vector<ConceptHit> &hits) {
  std::vector<ConceptInstance> out;
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const int sent = static_cast<int>(s);
    for (const PatternMatch &m : best) {
      if (m.sent_index != sent) continue;
      out.push_back(
          ConceptInstance{m.concept_label, sent, ConceptSource::kPattern, m, {}, {}});
    }
    std::set<std::string> seen;
    for (const ConceptHit &h : hits) {
      if (h.sent_index != sent || !seen.insert(h.concept_name).second) continue;
      out.push_back(ConceptInstance{h.concept_name, sent,
                                    ConceptSource::kConceptSearch,
                                    std::nullopt,
                                    {},
                                    {}});
    }
  }
  return out;
}

}  // namespace

DocumentResult ProcessDocument(const Document &input,
                               const Resources &resources,
                               const PipelineOptions &options) {
  DocumentResult r;
  r.doc = GroupSegments(RecognizeNames(input, resources.designators));
  const Document &doc = r.doc;

  for (const Sentence &sentence : doc.sentences) {
    std::vector<ConceptHit> hits = FindConcepts(sentence, resources.concepts);
    r.hits.insert(r.hits.end(), hits.begin(), hits.end());
    std::vector<PatternMatch> matches =
        MatchSentence(sentence, resources.patterns, options.match);
    std::vector<PatternMatch> best =
        SelectBest(matches, SelectionScope::kPerConceptGroup);
    r.matches.insert(r.matches.end(), matches.begin(), matches.end());
    r.best_matches.insert(r.best_matches.end(), best.begin(), best.end());
  }

  const DiscourseConfig &config = resources.discourse;
  r.registry = BuildRegistry(doc, config);
  if (options.discourse) r.registry = UnifyCompanyReferences(r.registry);
  r.topics = TrackTopics(doc, r.registry, config);
  r.concepts = CollectConcepts(doc, r.best_matches, r.hits);

  if (options.discourse) {
    ResolvePartners(doc, r.registry, r.topics, config, r.concepts);
    std::vector<ConceptInstance> tieups;
    for (const ConceptInstance &c : r.concepts) {
      if (c.source == ConceptSource::kPattern &&
          config.IsTieupConcept(c.label)) {
        tieups.push_back(c);
      }
    }
    r.segments = SegmentDiscourse(doc, tieups, r.registry);
    r.pronouns = ResolvePronouns(
        doc, r.registry, r.topics,
        CurrentTieups(r.segments, static_cast<int>(doc.sentences.size())),
        config);
    AssignSubjects(doc, r.registry, r.topics, r.pronouns, config, r.concepts);
    for (const DiscourseSegment &segment : r.segments) {
      if (segment.tieup_ids.empty()) continue;
      r.clusters.push_back(MergeConcepts(segment, r.concepts));
    }
  } else {
    auto unresolved = [](int, int) { return IdSet{}; };
    for (ConceptInstance &c : r.concepts) {
      c.partner_ids = CapturedCompanies(c, doc, r.registry, "@CNAME_PARTNER",
                                        config, unresolved);
      c.subject_ids = c.partner_ids;
      if (c.source != ConceptSource::kPattern ||
          !config.IsTieupConcept(c.label)) {
        continue;
      }
      DiscourseSegment segment{c.sent_index, c.sent_index, c.partner_ids,
                               StructureLabel::kUnlabeled};
      r.clusters.push_back(TieUpCluster{segment, {c}, {}});
    }
  }

  r.graph = GenerateTemplates(doc, r.clusters, r.registry, resources.templates);
  return r;
}

const std::vector<std::string> &DumpStages() {
  static const std::vector<std::string> kStages = {
      "matches", "concepts", "registry", "topics", "pronouns", "segments"};
  return kStages;
}

std::string DumpStage(const DocumentResult &r, std::string_view stage) {
  std::string out;
  const Document &doc = r.doc;
  if (stage == "matches") {
    for (const PatternMatch &m : r.matches) {
      bool best = std::find(r.best_matches.begin(), r.best_matches.end(), m) !=
                  r.best_matches.end();
      out += (best ? "* s" : "  s") + std::to_string(m.sent_index) + " " +
             m.rule_name + " [" + m.concept_label + "] cname=" +
             std::to_string(m.cname_filled) +
             " consumed=" + std::to_string(m.consumed) +
             " elements=" + std::to_string(m.elements_matched);
      for (const auto &[slot, span] : m.bindings) {
        out += " " + slot + "=" + SpanText(doc.sentences[m.sent_index], span);
      }
      out += "\n";
    }
  } else if (stage == "concepts") {
    for (const ConceptInstance &c : r.concepts) {
      out += "s" + std::to_string(c.sent_index) + " " + c.label +
             (c.source == ConceptSource::kPattern ? " pattern" : " keyword") +
             " partners=" + IdNames(c.partner_ids, r.registry) +
             " subjects=" + IdNames(c.subject_ids, r.registry) + "\n";
    }
  } else if (stage == "registry") {
    for (int n = 1; n <= r.registry.size(); ++n) {
      const RegistryEntry &e = r.registry.entry(n);
      out += std::to_string(n) + "\tid=" + std::to_string(e.id) + "\t" +
             e.pos + "\teg=" + (e.eg ? "yes" : "no") + "\t(" +
             std::to_string(e.position.sent) + "," +
             std::to_string(e.position.tok) + ")\t" + e.surface +
             (e.alias_of != 0 ? "\talias-of=" + std::to_string(e.alias_of)
                              : "") +
             "\n";
    }
  } else if (stage == "topics") {
    for (size_t s = 0; s < r.topics.topics.size(); ++s) {
      out += "s" + std::to_string(s) + "\t" +
             IdNames(r.topics.topics[s], r.registry) +
             (r.topics.inherited[s] ? "\tinherited" : "") + "\n";
    }
  } else if (stage == "pronouns") {
    for (const PronounReference &p : r.pronouns) {
      out += "(" + std::to_string(p.position.sent) + "," +
             std::to_string(p.position.tok) + ")\t" + p.surface + "\t" +
             IdNames(p.referents, r.registry) + "\n";
    }
  } else if (stage == "segments") {
    for (const DiscourseSegment &s : r.segments) {
      out += "[" + std::to_string(s.first_sent) + "-" +
             std::to_string(s.last_sent) + "]\t" +
             std::string(StructureLabelName(s.structure)) + "\t" +
             IdNames(s.tieup_ids, r.registry) + "\n";
    }
  } else {
    throw std::invalid_argument("unknown dump stage '" + std::string(stage) +
                                "'");
  }
  return out;
}

}  // namespace tieup

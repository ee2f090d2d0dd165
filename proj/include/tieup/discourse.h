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

#ifndef TIEUP_DISCOURSE_H_
#define TIEUP_DISCOURSE_H_

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tieup/pattern.h"
#include "tieup/token.h"

namespace tieup {

// Sorted, duplicate-free list of unified company ids.
using IdSet = std::vector<int>;

IdSet MakeIdSet(std::vector<int> ids);
IdSet Union(const IdSet &a, const IdSet &b);
bool Intersects(const IdSet &a, const IdSet &b);

struct DiscourseConfig {
  std::string both_pronoun = "両社";
  std::string same_pronoun = "同社";
  std::string self_pronoun = "自社";
  std::vector<std::string> subject_markers = {"が", "は", "も"};
  // Concepts whose pattern matches introduce a tie-up relationship.
  std::vector<std::string> tieup_concepts = {"JOINT-VENTURE",
                                             "ECONOMIC-ACTIVITY"};

  bool IsPronoun(std::string_view surface) const;
  bool IsSubjectMarker(std::string_view surface) const;
  bool IsTieupConcept(std::string_view label) const;
};

// `key = value` lines: both_pronoun, same_pronoun, self_pronoun,
// subject_markers and tieup_concepts (the last two whitespace-separated).
DiscourseConfig ParseDiscourseConfig(std::string_view text);

struct TextPosition {
  int sent = 0;
  int tok = 0;
  auto operator<=>(const TextPosition &other) const = default;
};

struct RegistryEntry {
  std::string surface;
  std::string pos;
  bool eg = false;  // the surface is a single English word
  int id = 0;       // 1-based; equal ids mean the same company
  TextPosition position;
  // For English words lifted out of a longer name: the entry number of that
  // name. 0 otherwise.
  int alias_of = 0;

  bool operator==(const RegistryEntry &other) const = default;
};

// Name candidates in text order, numbered 1..size(). Holds every grouped
// unit tagged company, person, place or unknown, plus one alias entry for
// each English word inside a longer name (placed just before that name).
class CompanyRegistry {
 public:
  CompanyRegistry() = default;
  explicit CompanyRegistry(std::vector<RegistryEntry> entries)
      : entries_(std::move(entries)) {}

  int size() const { return static_cast<int>(entries_.size()); }
  const RegistryEntry &entry(int number) const { return entries_[number - 1]; }
  RegistryEntry &entry(int number) { return entries_[number - 1]; }
  const std::vector<RegistryEntry> &entries() const { return entries_; }

  // Entry number of the (non-alias) entry at a token, or 0.
  int EntryAt(int sent, int tok) const;
  // Unified id of the token, or 0 when the token is not registered.
  int IdAt(int sent, int tok) const;
  // True if the class root was tagged as a company.
  bool IsCompanyId(int id) const;
  // Earliest non-alias surface carrying `id`.
  const std::string &CanonicalName(int id) const;
  // Distinct surfaces of the class other than the canonical one.
  std::vector<std::string> Aliases(int id) const;
  // Entry number of the first mention of class `id`.
  int FirstMention(int id) const;

  bool operator==(const CompanyRegistry &other) const = default;

 private:
  std::vector<RegistryEntry> entries_;
};

CompanyRegistry BuildRegistry(const Document &doc,
                              const DiscourseConfig &config);

// Step 1: every entry gets its own number as id.
void InitializeIds(CompanyRegistry &registry);

// Step 2: scans earlier/later pairs and rewrites the id of each later entry
// recognised as an abbreviation of an earlier one, then links alias entries
// with their names. Entries whose id was already rewritten are skipped both
// as sources and as targets.
void FindAbbreviations(CompanyRegistry &registry);

// InitializeIds followed by FindAbbreviations.
CompanyRegistry UnifyCompanyReferences(CompanyRegistry registry);

struct TopicState {
  std::vector<IdSet> topics;  // per sentence
  std::vector<bool> inherited;
};

// Companies directly followed by a subject marker are the sentence's topics;
// a sentence without any inherits the previous sentence's topics.
TopicState TrackTopics(const Document &doc, const CompanyRegistry &registry,
                       const DiscourseConfig &config);

// Referents of the pronoun token at (sent, tok). `current_tieup` is the
// company set of the tie-up in force at that point (possibly empty).
IdSet ResolvePronoun(const Document &doc, const CompanyRegistry &registry,
                     const TopicState &topics, const IdSet &current_tieup,
                     int sent, int tok, const DiscourseConfig &config);

struct PronounReference {
  TextPosition position;
  std::string surface;
  IdSet referents;  // empty when unresolved

  bool operator==(const PronounReference &other) const = default;
};

// Resolves every pronoun in the document. `current_tieup[s]` is the tie-up
// company set in force for sentence s.
std::vector<PronounReference> ResolvePronouns(
    const Document &doc, const CompanyRegistry &registry,
    const TopicState &topics, const std::vector<IdSet> &current_tieup,
    const DiscourseConfig &config);

enum class ConceptSource { kConceptSearch, kPattern };

struct ConceptInstance {
  std::string label;
  int sent_index = 0;
  ConceptSource source = ConceptSource::kConceptSearch;
  std::optional<PatternMatch> match;  // set for pattern instances
  IdSet partner_ids;  // companies in @CNAME_PARTNER* variables
  IdSet subject_ids;  // @CNAME_PARTNER_SUBJ* companies, else the topics

  bool operator==(const ConceptInstance &other) const = default;
};

// Company ids captured by variables whose slot starts with `prefix`. Pronoun
// tokens are resolved through `pronoun_referents`.
IdSet CapturedCompanies(
    const ConceptInstance &instance, const Document &doc,
    const CompanyRegistry &registry, std::string_view prefix,
    const DiscourseConfig &config,
    const std::function<IdSet(int sent, int tok)> &pronoun_referents);

// Fills partner_ids of every instance in one pass over the text, tracking
// the tie-up in force so that 両社 inside a partner variable refers to the
// previously introduced tie-up. Instances must be in sentence order.
void ResolvePartners(const Document &doc, const CompanyRegistry &registry,
                     const TopicState &topics, const DiscourseConfig &config,
                     std::vector<ConceptInstance> &instances);

// Fills subject_ids from the resolved pronoun references and topics.
void AssignSubjects(const Document &doc, const CompanyRegistry &registry,
                    const TopicState &topics,
                    const std::vector<PronounReference> &pronouns,
                    const DiscourseConfig &config,
                    std::vector<ConceptInstance> &instances);

enum class StructureLabel { kTypeI, kTypeII, kUnlabeled };

std::string_view StructureLabelName(StructureLabel label);

struct DiscourseSegment {
  int first_sent = 0;
  int last_sent = 0;  // inclusive
  IdSet tieup_ids;
  StructureLabel structure = StructureLabel::kUnlabeled;

  bool Contains(int sent) const {
    return sent >= first_sent && sent <= last_sent;
  }
  bool operator==(const DiscourseSegment &other) const = default;
};

// Opens a new segment at every tie-up mention (an instance with at least two
// partner ids) whose partner set differs from the current segment's. The
// last segment runs to the end of the document. Without any tie-up mention
// the result is one unlabeled segment over the whole document with no ids.
std::vector<DiscourseSegment> SegmentDiscourse(
    const Document &doc, const std::vector<ConceptInstance> &tieup_instances,
    const CompanyRegistry &registry);

// Tie-up company set in force for each sentence.
std::vector<IdSet> CurrentTieups(const std::vector<DiscourseSegment> &segments,
                                 int num_sentences);

struct TieUpCluster {
  DiscourseSegment segment;
  std::vector<ConceptInstance> attached;
  std::vector<ConceptInstance> unattached;  // diagnostics only
};

// A concept inside the segment joins the cluster iff its subjects share a
// company with the segment's tie-up. Concepts outside the segment are
// ignored.
TieUpCluster MergeConcepts(const DiscourseSegment &segment,
                           const std::vector<ConceptInstance> &concepts);

}  // namespace tieup

#endif  // TIEUP_DISCOURSE_H_

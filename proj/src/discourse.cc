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

#include "tieup/discourse.h"

#include <algorithm>
#include <map>

#include "tieup/error.h"
#include "tieup/lcs.h"
#include "tieup/utf8.h"

namespace tieup {

IdSet MakeIdSet(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

IdSet Union(const IdSet &a, const IdSet &b) {
  IdSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool Intersects(const IdSet &a, const IdSet &b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool DiscourseConfig::IsPronoun(std::string_view surface) const {
  return surface == both_pronoun || surface == same_pronoun ||
         surface == self_pronoun;
}

bool DiscourseConfig::IsSubjectMarker(std::string_view surface) const {
  return std::find(subject_markers.begin(), subject_markers.end(), surface) !=
         subject_markers.end();
}

bool DiscourseConfig::IsTieupConcept(std::string_view label) const {
  return std::find(tieup_concepts.begin(), tieup_concepts.end(), label) !=
         tieup_concepts.end();
}

DiscourseConfig ParseDiscourseConfig(std::string_view text) {
  DiscourseConfig config;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_no);
    }
    std::string_view key = Trim(line.substr(0, eq));
    std::string_view value = Trim(line.substr(eq + 1));
    if (value.empty()) throw ParseError("empty value for " + std::string(key),
                                        line_no);
    if (key == "both_pronoun") {
      config.both_pronoun = value;
    } else if (key == "same_pronoun") {
      config.same_pronoun = value;
    } else if (key == "self_pronoun") {
      config.self_pronoun = value;
    } else if (key == "subject_markers") {
      config.subject_markers = SplitWhitespace(value);
    } else if (key == "tieup_concepts") {
      config.tieup_concepts = SplitWhitespace(value);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  return config;
}

int CompanyRegistry::EntryAt(int sent, int tok) const {
  TextPosition pos{sent, tok};
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), pos,
      [](const RegistryEntry &e, const TextPosition &p) {
        return e.position < p;
      });
  for (; it != entries_.end() && it->position == pos; ++it) {
    if (it->alias_of == 0) return static_cast<int>(it - entries_.begin()) + 1;
  }
  return 0;
}

int CompanyRegistry::IdAt(int sent, int tok) const {
  int number = EntryAt(sent, tok);
  return number == 0 ? 0 : entry(number).id;
}

bool CompanyRegistry::IsCompanyId(int id) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [id](const RegistryEntry &e) {
                       return e.id == id && e.pos == pos::kCompany;
                     });
}

const std::string &CompanyRegistry::CanonicalName(int id) const {
  const RegistryEntry *fallback = nullptr;
  for (const RegistryEntry &e : entries_) {
    if (e.id != id) continue;
    if (e.alias_of == 0) return e.surface;
    if (fallback == nullptr) fallback = &e;
  }
  static const std::string kEmpty;
  return fallback != nullptr ? fallback->surface : kEmpty;
}

std::vector<std::string> CompanyRegistry::Aliases(int id) const {
  const std::string &canonical = CanonicalName(id);
  std::vector<std::string> aliases;
  for (const RegistryEntry &e : entries_) {
    if (e.id != id || e.surface == canonical) continue;
    if (std::find(aliases.begin(), aliases.end(), e.surface) == aliases.end()) {
      aliases.push_back(e.surface);
    }
  }
  return aliases;
}

int CompanyRegistry::FirstMention(int id) const {
  for (int n = 1; n <= size(); ++n) {
    if (entry(n).id == id) return n;
  }
  return 0;
}

CompanyRegistry BuildRegistry(const Document &doc,
                              const DiscourseConfig &config) {
  std::vector<RegistryEntry> entries;
  for (const Sentence &sentence : doc.sentences) {
    for (const Token &token : sentence) {
      if (config.IsPronoun(token.surface)) continue;
      if (!IsNameTag(token.pos) && token.pos != pos::kUnknown) continue;
      TextPosition position{token.sent_index, token.tok_index};
      const bool eg = IsAsciiWord(token.surface);
      if (!eg) {
        std::vector<std::string> words = AsciiWords(token.surface);
        int parent = static_cast<int>(entries.size()) + 1;
        for (const std::string &w : words) {
          if (w.size() >= 2) ++parent;
        }
        for (std::string &w : words) {
          if (w.size() < 2) continue;
          entries.push_back(
              RegistryEntry{std::move(w), token.pos, true, 0, position, parent});
        }
      }
      entries.push_back(
          RegistryEntry{token.surface, token.pos, eg, 0, position, 0});
    }
  }
  CompanyRegistry registry(std::move(entries));
  InitializeIds(registry);
  return registry;
}

void InitializeIds(CompanyRegistry &registry) {
  for (int i = 1; i <= registry.size(); ++i) registry.entry(i).id = i;
}

void FindAbbreviations(CompanyRegistry &registry) {
  const int cmax = registry.size();
  std::vector<std::u32string> strings;
  strings.reserve(cmax);
  for (const RegistryEntry &e : registry.entries()) {
    strings.push_back(DecodeUtf8(e.surface));
  }

  for (int i = 1; i <= cmax; ++i) {
    RegistryEntry &source = registry.entry(i);
    if (source.id != i) continue;  // already an abbreviation
    const int len_src = static_cast<int>(strings[i - 1].size());
    for (int j = i + 1; j <= cmax; ++j) {
      RegistryEntry &target = registry.entry(j);
      if (target.id != j) continue;
      const int len = static_cast<int>(strings[j - 1].size());
      const int lcs = LcsLength(strings[i - 1], strings[j - 1]);
      if (lcs < 2) continue;
      if (source.eg && len_src == lcs && lcs == len) {
        target.id = source.id;  // English word abbreviation
      } else if (!source.eg && lcs == len) {
        target.id = source.id;
      }
    }
  }

  // An English word lifted out of a name refers to that name.
  for (int a = 1; a <= cmax; ++a) {
    const RegistryEntry &alias = registry.entry(a);
    if (alias.alias_of == 0) continue;
    const int alias_id = alias.id;
    const int name_id = registry.entry(alias.alias_of).id;
    if (alias_id == name_id) continue;
    const int keep = std::min(alias_id, name_id);
    const int drop = std::max(alias_id, name_id);
    for (int k = 1; k <= cmax; ++k) {
      if (registry.entry(k).id == drop) registry.entry(k).id = keep;
    }
  }
}

CompanyRegistry UnifyCompanyReferences(CompanyRegistry registry) {
  InitializeIds(registry);
  FindAbbreviations(registry);
  return registry;
}

TopicState TrackTopics(const Document &doc, const CompanyRegistry &registry,
                       const DiscourseConfig &config) {
  TopicState state;
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence &sentence = doc.sentences[s];
    std::vector<int> found;
    for (size_t t = 0; t + 1 < sentence.size(); ++t) {
      int id = registry.IdAt(static_cast<int>(s), static_cast<int>(t));
      if (id != 0 && registry.IsCompanyId(id) &&
          config.IsSubjectMarker(sentence[t + 1].surface)) {
        found.push_back(id);
      }
    }
    if (found.empty()) {
      state.topics.push_back(s > 0 ? state.topics[s - 1] : IdSet{});
      state.inherited.push_back(s > 0);
    } else {
      state.topics.push_back(MakeIdSet(std::move(found)));
      state.inherited.push_back(false);
    }
  }
  return state;
}

IdSet ResolvePronoun(const Document &doc, const CompanyRegistry &registry,
                     const TopicState &topics, const IdSet &current_tieup,
                     int sent, int tok, const DiscourseConfig &config) {
  const std::string &surface = doc.sentences[sent][tok].surface;
  if (surface == config.both_pronoun) return current_tieup;
  if (surface == config.self_pronoun) return topics.topics[sent];
  if (surface != config.same_pronoun) return {};

  std::vector<int> preceding;
  for (int t = 0; t < tok; ++t) {
    int id = registry.IdAt(sent, t);
    if (id != 0 && registry.IsCompanyId(id)) preceding.push_back(id);
  }
  if (MakeIdSet(preceding).size() >= 2) return {preceding.back()};
  return topics.topics[sent];
}

std::vector<PronounReference> ResolvePronouns(
    const Document &doc, const CompanyRegistry &registry,
    const TopicState &topics, const std::vector<IdSet> &current_tieup,
    const DiscourseConfig &config) {
  std::vector<PronounReference> refs;
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence &sentence = doc.sentences[s];
    for (size_t t = 0; t < sentence.size(); ++t) {
      if (!config.IsPronoun(sentence[t].surface)) continue;
      const int sent = static_cast<int>(s);
      const int tok = static_cast<int>(t);
      refs.push_back(PronounReference{
          {sent, tok},
          sentence[t].surface,
          ResolvePronoun(doc, registry, topics, current_tieup[s], sent, tok,
                         config)});
    }
  }
  return refs;
}

IdSet CapturedCompanies(
    const ConceptInstance &instance, const Document &doc,
    const CompanyRegistry &registry, std::string_view prefix,
    const DiscourseConfig &config,
    const std::function<IdSet(int sent, int tok)> &pronoun_referents) {
  if (!instance.match.has_value()) return {};
  const int sent = instance.sent_index;
  const Sentence &sentence = doc.sentences[sent];
  IdSet ids;
  for (const auto &[slot, span] : instance.match->bindings) {
    if (!slot.starts_with(prefix)) continue;
    for (int t = span.begin; t < span.end; ++t) {
      if (config.IsPronoun(sentence[t].surface)) {
        ids = Union(ids, pronoun_referents(sent, t));
        continue;
      }
      int id = registry.IdAt(sent, t);
      if (id != 0 && registry.IsCompanyId(id)) ids = Union(ids, {id});
    }
  }
  return ids;
}

void ResolvePartners(const Document &doc, const CompanyRegistry &registry,
                     const TopicState &topics, const DiscourseConfig &config,
                     std::vector<ConceptInstance> &instances) {
  IdSet current;
  auto resolve = [&](int sent, int tok) {
    return ResolvePronoun(doc, registry, topics, current, sent, tok, config);
  };
  for (ConceptInstance &instance : instances) {
    instance.partner_ids = CapturedCompanies(instance, doc, registry,
                                             "@CNAME_PARTNER", config, resolve);
    if (config.IsTieupConcept(instance.label) &&
        instance.partner_ids.size() >= 2 && instance.partner_ids != current) {
      current = instance.partner_ids;
    }
  }
}

void AssignSubjects(const Document &doc, const CompanyRegistry &registry,
                    const TopicState &topics,
                    const std::vector<PronounReference> &pronouns,
                    const DiscourseConfig &config,
                    std::vector<ConceptInstance> &instances) {
  std::map<TextPosition, IdSet> referents;
  for (const PronounReference &ref : pronouns) {
    referents[ref.position] = ref.referents;
  }
  auto lookup = [&](int sent, int tok) {
    auto it = referents.find(TextPosition{sent, tok});
    return it == referents.end() ? IdSet{} : it->second;
  };
  for (ConceptInstance &instance : instances) {
    instance.subject_ids = CapturedCompanies(
        instance, doc, registry, "@CNAME_PARTNER_SUBJ", config, lookup);
    if (instance.subject_ids.empty()) {
      instance.subject_ids = topics.topics[instance.sent_index];
    }
  }
}

std::string_view StructureLabelName(StructureLabel label) {
  switch (label) {
    case StructureLabel::kTypeI:
      return "type-I";
    case StructureLabel::kTypeII:
      return "type-II";
    case StructureLabel::kUnlabeled:
      return "unlabeled";
  }
  return "";
}

std::vector<DiscourseSegment> SegmentDiscourse(
    const Document &doc, const std::vector<ConceptInstance> &tieup_instances,
    const CompanyRegistry & /*registry*/) {
  const int last = static_cast<int>(doc.sentences.size()) - 1;
  std::vector<const ConceptInstance *> mentions;
  for (const ConceptInstance &c : tieup_instances) {
    if (c.partner_ids.size() >= 2) mentions.push_back(&c);
  }
  std::stable_sort(mentions.begin(), mentions.end(),
                   [](const ConceptInstance *a, const ConceptInstance *b) {
                     return a->sent_index < b->sent_index;
                   });

  std::vector<DiscourseSegment> segments;
  for (const ConceptInstance *c : mentions) {
    if (!segments.empty()) {
      DiscourseSegment &open = segments.back();
      if (c->partner_ids == open.tieup_ids) continue;
      // The first tie-up mentioned in a sentence owns that sentence.
      if (c->sent_index == open.first_sent) continue;
      open.last_sent = c->sent_index - 1;
    }
    segments.push_back(DiscourseSegment{c->sent_index, last, c->partner_ids,
                                        StructureLabel::kTypeI});
  }
  if (segments.empty()) {
    return {DiscourseSegment{0, std::max(last, 0), {},
                             StructureLabel::kUnlabeled}};
  }

  bool reappears = false;
  for (size_t k = 0; k < segments.size() && !reappears; ++k) {
    for (size_t j = 0; j + 1 < k; ++j) {
      if (segments[j].tieup_ids == segments[k].tieup_ids) {
        reappears = true;
        break;
      }
    }
  }
  if (reappears) {
    for (DiscourseSegment &s : segments) s.structure = StructureLabel::kTypeII;
  }
  return segments;
}

std::vector<IdSet> CurrentTieups(const std::vector<DiscourseSegment> &segments,
                                 int num_sentences) {
  std::vector<IdSet> current(num_sentences);
  for (const DiscourseSegment &segment : segments) {
    for (int s = segment.first_sent;
         s <= segment.last_sent && s < num_sentences; ++s) {
      current[s] = segment.tieup_ids;
    }
  }
  return current;
}

TieUpCluster MergeConcepts(const DiscourseSegment &segment,
                           const std::vector<ConceptInstance> &concepts) {
  TieUpCluster cluster{segment, {}, {}};
  for (const ConceptInstance &c : concepts) {
    if (!segment.Contains(c.sent_index)) continue;
    if (Intersects(c.subject_ids, segment.tieup_ids)) {
      cluster.attached.push_back(c);
    } else {
      cluster.unattached.push_back(c);
    }
  }
  return cluster;
}

}  // namespace tieup

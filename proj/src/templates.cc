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

#include "tieup/templates.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "tieup/error.h"
#include "tieup/utf8.h"

namespace tieup {

namespace {

std::string Quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Parses "<TYPE-n>" at the start of `s`; returns the length consumed or 0.
size_t ParseRef(std::string_view s, ObjectRef &ref) {
  if (s.empty() || s.front() != '<') return 0;
  size_t close = s.find('>');
  if (close == std::string_view::npos) return 0;
  std::string_view body = s.substr(1, close - 1);
  size_t dash = body.rfind('-');
  if (dash == std::string_view::npos || dash == 0) return 0;
  int number = 0;
  std::string_view digits = body.substr(dash + 1);
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), number);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      number < 1) {
    return 0;
  }
  ref = ObjectRef{std::string(body.substr(0, dash)), number};
  return close + 1;
}

std::vector<SlotValue> ParseValues(std::string_view s, int line) {
  std::vector<SlotValue> values;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    if (s[i] == '"') {
      std::string text;
      size_t j = i + 1;
      bool closed = false;
      while (j < s.size()) {
        if (s[j] == '\\' && j + 1 < s.size()) {
          text.push_back(s[j + 1]);
          j += 2;
        } else if (s[j] == '"') {
          closed = true;
          ++j;
          break;
        } else {
          text.push_back(s[j++]);
        }
      }
      if (!closed) throw ParseError("unterminated string value", line);
      values.emplace_back(std::move(text));
      i = j;
      continue;
    }
    if (s[i] == '<') {
      ObjectRef ref;
      size_t n = ParseRef(s.substr(i), ref);
      if (n == 0) throw ParseError("malformed object reference", line);
      values.emplace_back(std::move(ref));
      i += n;
      continue;
    }
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    values.emplace_back(std::string(s.substr(i, j - i)));
    i = j;
  }
  return values;
}

std::string UpperCase(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::string ObjectRef::ToString() const {
  return "<" + type + "-" + std::to_string(number) + ">";
}

const Slot *TemplateObject::FindSlot(std::string_view name) const {
  for (const Slot &slot : slots) {
    if (slot.name == name) return &slot;
  }
  return nullptr;
}

int TemplateObject::num_fills() const {
  int n = 0;
  for (const Slot &slot : slots) n += static_cast<int>(slot.values.size());
  return n;
}

const TemplateObject *TemplateGraph::Find(const ObjectRef &ref) const {
  for (const TemplateObject &o : objects) {
    if (o.type == ref.type && o.number == ref.number) return &o;
  }
  return nullptr;
}

std::vector<const TemplateObject *> TemplateGraph::OfType(
    std::string_view type) const {
  std::vector<const TemplateObject *> out;
  for (const TemplateObject &o : objects) {
    if (o.type == type) out.push_back(&o);
  }
  return out;
}

std::vector<ObjectRef> TemplateGraph::DanglingRefs() const {
  std::set<ObjectRef> present;
  for (const TemplateObject &o : objects) present.insert(o.ref());
  std::vector<ObjectRef> dangling;
  for (const TemplateObject &o : objects) {
    for (const Slot &slot : o.slots) {
      for (const SlotValue &v : slot.values) {
        if (const auto *ref = std::get_if<ObjectRef>(&v);
            ref != nullptr && !present.contains(*ref)) {
          dangling.push_back(*ref);
        }
      }
    }
  }
  return dangling;
}

int TemplateGraph::num_fills() const {
  int n = 0;
  for (const TemplateObject &o : objects) n += o.num_fills();
  return n;
}

std::string SerializeTemplates(const TemplateGraph &graph) {
  std::vector<ObjectRef> dangling = graph.DanglingRefs();
  if (!dangling.empty()) {
    throw TemplateError("dangling reference " + dangling.front().ToString() +
                        " in document " + graph.doc_id);
  }
  std::string out = "#DOC " + graph.doc_id + "\n";
  for (const TemplateObject &o : graph.objects) {
    out += "\n" + o.ref().ToString() + " :=";
    if (!o.note.empty()) out += "  # " + o.note;
    out += "\n";
    for (const Slot &slot : o.slots) {
      out += "  " + slot.name + ":";
      for (const SlotValue &v : slot.values) {
        out += ' ';
        if (const auto *ref = std::get_if<ObjectRef>(&v)) {
          out += ref->ToString();
        } else {
          out += Quote(std::get<std::string>(v));
        }
      }
      out += "\n";
    }
  }
  return out;
}

std::vector<TemplateGraph> ParseTemplateFile(std::string_view text) {
  std::vector<TemplateGraph> graphs;
  TemplateObject *current = nullptr;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = Trim(raw);
    if (line.empty()) continue;

    if (line.starts_with("#DOC")) {
      std::string_view id = Trim(line.substr(4));
      if (id.empty()) throw ParseError("#DOC needs a document id", line_no);
      graphs.push_back(TemplateGraph{std::string(id), {}});
      current = nullptr;
      continue;
    }
    if (line.front() == '#') continue;
    if (graphs.empty()) {
      throw ParseError("template content before #DOC", line_no);
    }
    TemplateGraph &graph = graphs.back();

    if (line.front() == '<') {
      ObjectRef ref;
      size_t n = ParseRef(line, ref);
      if (n == 0) throw ParseError("malformed object header", line_no);
      std::string_view rest = Trim(line.substr(n));
      if (!rest.starts_with(":=")) {
        throw ParseError("expected ':=' after object header", line_no);
      }
      rest = Trim(rest.substr(2));
      std::string note;
      if (!rest.empty()) {
        if (rest.front() != '#') {
          throw ParseError("unexpected text after ':='", line_no);
        }
        note = std::string(Trim(rest.substr(1)));
      }
      if (graph.Find(ref) != nullptr) {
        throw ParseError("duplicate object " + ref.ToString(), line_no);
      }
      graph.objects.push_back(
          TemplateObject{ref.type, ref.number, {}, std::move(note)});
      current = &graph.objects.back();
      continue;
    }

    if (current == nullptr) throw ParseError("slot outside an object", line_no);
    size_t colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0) {
      throw ParseError("expected 'SLOT: values'", line_no);
    }
    std::string name(Trim(line.substr(0, colon)));
    if (current->FindSlot(name) != nullptr) {
      throw ParseError("duplicate slot " + name, line_no);
    }
    current->slots.push_back(
        Slot{std::move(name), ParseValues(line.substr(colon + 1), line_no)});
  }
  return graphs;
}

TemplateGraph ParseTemplates(std::string_view text) {
  std::vector<TemplateGraph> graphs = ParseTemplateFile(text);
  if (graphs.size() != 1) {
    throw ParseError("expected one #DOC section, found " +
                         std::to_string(graphs.size()),
                     0);
  }
  return std::move(graphs.front());
}

TemplateGraph BuildGraph(std::string doc_id,
                         const std::vector<TieUpObject> &tieups,
                         const std::vector<EntityObject> &entities,
                         const std::vector<ActivityObject> &activities) {
  TemplateGraph graph{std::move(doc_id), {}};
  const std::string tieup_type(kTieUpType);
  const std::string entity_type(kEntityType);
  const std::string activity_type(kActivityType);

  for (const TieUpObject &t : tieups) {
    TemplateObject o{tieup_type, t.number, {}, {}};
    Slot entity_slot{"ENTITY", {}};
    for (int e : t.entities) entity_slot.values.emplace_back(ObjectRef{entity_type, e});
    if (!entity_slot.values.empty()) o.slots.push_back(std::move(entity_slot));
    if (!t.joint_venture_companies.empty()) {
      Slot slot{"JOINT_VENTURE_CO", {}};
      for (const std::string &c : t.joint_venture_companies) {
        slot.values.emplace_back(c);
      }
      o.slots.push_back(std::move(slot));
    }
    if (!t.activities.empty()) {
      Slot slot{"ACTIVITY", {}};
      for (int a : t.activities) slot.values.emplace_back(ObjectRef{activity_type, a});
      o.slots.push_back(std::move(slot));
    }
    o.slots.push_back(Slot{
        "STATUS",
        {std::string(t.status == TieUpStatus::kDissolved ? "DISSOLVED"
                                                         : "EXISTING")}});
    if (!t.well_formed) o.note = "fewer than two entities";
    graph.objects.push_back(std::move(o));
  }
  for (const EntityObject &e : entities) {
    TemplateObject o{entity_type, e.number, {}, {}};
    o.slots.push_back(Slot{"NAME", {e.name}});
    if (!e.aliases.empty()) {
      Slot slot{"ALIASES", {}};
      for (const std::string &a : e.aliases) slot.values.emplace_back(a);
      o.slots.push_back(std::move(slot));
    }
    o.slots.push_back(Slot{"TYPE", {e.entity_type}});
    graph.objects.push_back(std::move(o));
  }
  for (const ActivityObject &a : activities) {
    graph.objects.push_back(TemplateObject{
        activity_type, a.number, {Slot{"DESCRIPTION", {a.description}}}, {}});
  }
  return graph;
}

std::string HeadPhrase(const Sentence &sentence, int begin, int end) {
  for (int t = end - 1; t >= begin; --t) {
    if (sentence[t].pos == pos::kCompany) return sentence[t].surface;
  }
  int run_end = end;
  while (run_end > begin && !IsNounLikeTag(sentence[run_end - 1].pos)) {
    --run_end;
  }
  int run_begin = run_end;
  while (run_begin > begin && IsNounLikeTag(sentence[run_begin - 1].pos)) {
    --run_begin;
  }
  if (run_begin == run_end) {
    run_begin = begin;
    run_end = end;
  }
  std::string text;
  for (int t = run_begin; t < run_end; ++t) text += sentence[t].surface;
  return text;
}

TemplateGraph GenerateTemplates(const Document &doc,
                                const std::vector<TieUpCluster> &clusters,
                                const CompanyRegistry &registry,
                                const TemplateOptions &options) {
  std::vector<const TieUpCluster *> used;
  for (const TieUpCluster &c : clusters) {
    if (!c.segment.tieup_ids.empty() || !c.attached.empty()) {
      used.push_back(&c);
    }
  }

  // Entity numbers follow the first mention of each company.
  std::vector<int> company_ids;
  for (const TieUpCluster *c : used) {
    company_ids.insert(company_ids.end(), c->segment.tieup_ids.begin(),
                       c->segment.tieup_ids.end());
  }
  company_ids = MakeIdSet(std::move(company_ids));
  std::sort(company_ids.begin(), company_ids.end(), [&](int a, int b) {
    return registry.FirstMention(a) < registry.FirstMention(b);
  });
  std::map<int, int> entity_number;
  std::vector<EntityObject> entities;
  for (int id : company_ids) {
    const int number = static_cast<int>(entities.size()) + 1;
    entity_number[id] = number;
    const int first = registry.FirstMention(id);
    std::string type = registry.IsCompanyId(id)
                           ? "COMPANY"
                           : UpperCase(first > 0 ? registry.entry(first).pos
                                                 : std::string("unknown"));
    entities.push_back(EntityObject{number, registry.CanonicalName(id),
                                    registry.Aliases(id), std::move(type)});
  }

  std::vector<TieUpObject> tieups;
  std::vector<ActivityObject> activities;
  for (const TieUpCluster *c : used) {
    TieUpObject t;
    t.number = static_cast<int>(tieups.size()) + 1;
    for (int id : c->segment.tieup_ids) t.entities.push_back(entity_number[id]);
    std::sort(t.entities.begin(), t.entities.end());
    t.well_formed = t.entities.size() >= 2;

    std::vector<std::string> descriptions;
    for (const ConceptInstance &concept_instance : c->attached) {
      if (concept_instance.label == options.dissolved_concept) {
        t.status = TieUpStatus::kDissolved;
      }
      if (!concept_instance.match.has_value()) continue;
      const PatternMatch &m = *concept_instance.match;
      const Sentence &sentence = doc.sentences[m.sent_index];
      for (const auto &[slot, span] : m.bindings) {
        if (!slot.starts_with(options.created_company_prefix)) continue;
        std::string phrase = HeadPhrase(sentence, span.begin, span.end);
        if (std::find(t.joint_venture_companies.begin(),
                      t.joint_venture_companies.end(),
                      phrase) == t.joint_venture_companies.end()) {
          t.joint_venture_companies.push_back(std::move(phrase));
        }
      }
      if (concept_instance.label == options.activity_concept &&
          !m.index_span.empty()) {
        std::string text;
        for (int k = m.index_span.begin; k < m.index_span.end; ++k) {
          text += sentence[k].surface;
        }
        if (std::find(descriptions.begin(), descriptions.end(), text) ==
            descriptions.end()) {
          descriptions.push_back(text);
          const int number = static_cast<int>(activities.size()) + 1;
          activities.push_back(ActivityObject{number, text});
          t.activities.push_back(number);
        }
      }
    }
    tieups.push_back(std::move(t));
  }
  return BuildGraph(doc.doc_id, tieups, entities, activities);
}

}  // namespace tieup

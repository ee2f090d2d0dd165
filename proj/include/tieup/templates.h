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

#ifndef TIEUP_TEMPLATES_H_
#define TIEUP_TEMPLATES_H_

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tieup/discourse.h"
#include "tieup/token.h"

namespace tieup {

// Object types of the joint-venture template.
inline constexpr std::string_view kTieUpType = "TIE_UP";
inline constexpr std::string_view kEntityType = "ENTITY";
inline constexpr std::string_view kActivityType = "ACTIVITY";

struct ObjectRef {
  std::string type;
  int number = 0;

  std::string ToString() const;  // <TYPE-n>
  auto operator<=>(const ObjectRef &other) const = default;
};

using SlotValue = std::variant<std::string, ObjectRef>;

struct Slot {
  std::string name;
  std::vector<SlotValue> values;

  bool operator==(const Slot &other) const = default;
};

struct TemplateObject {
  std::string type;
  int number = 0;
  std::vector<Slot> slots;
  std::string note;  // free-text annotation on the header line

  ObjectRef ref() const { return ObjectRef{type, number}; }
  const Slot *FindSlot(std::string_view name) const;
  int num_fills() const;

  bool operator==(const TemplateObject &other) const = default;
};

struct TemplateGraph {
  std::string doc_id;
  std::vector<TemplateObject> objects;

  const TemplateObject *Find(const ObjectRef &ref) const;
  std::vector<const TemplateObject *> OfType(std::string_view type) const;
  // References that do not resolve to an object of the graph.
  std::vector<ObjectRef> DanglingRefs() const;
  int num_fills() const;

  bool operator==(const TemplateGraph &other) const = default;
};

class TemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Block format:
//
//   #DOC <id>
//
//   <TIE_UP-1> :=
//     ENTITY: <ENTITY-1> <ENTITY-2>
//     STATUS: "EXISTING"
//
// String values are double-quoted with \" and \\ escapes. Throws
// TemplateError naming the first dangling reference.
std::string SerializeTemplates(const TemplateGraph &graph);

// Accepts everything SerializeTemplates writes; bare words are read as
// strings. Throws ParseError.
std::vector<TemplateGraph> ParseTemplateFile(std::string_view text);
TemplateGraph ParseTemplates(std::string_view text);

enum class TieUpStatus { kExisting, kDissolved };

struct EntityObject {
  int number = 0;
  std::string name;
  std::vector<std::string> aliases;
  std::string entity_type;  // COMPANY, PERSON, ...
};

struct ActivityObject {
  int number = 0;
  std::string description;
};

struct TieUpObject {
  int number = 0;
  std::vector<int> entities;  // EntityObject numbers
  std::vector<std::string> joint_venture_companies;
  std::vector<int> activities;  // ActivityObject numbers
  TieUpStatus status = TieUpStatus::kExisting;
  bool well_formed = true;  // at least two entities
};

struct TemplateOptions {
  std::string created_company_prefix = "@CNAME_CREATED";
  std::string activity_concept = "ECONOMIC-ACTIVITY";
  std::string dissolved_concept = "DISSOLVED";
};

// Lowers typed objects to the generic graph: tie-ups, then entities, then
// activities.
TemplateGraph BuildGraph(std::string doc_id,
                         const std::vector<TieUpObject> &tieups,
                         const std::vector<EntityObject> &entities,
                         const std::vector<ActivityObject> &activities);

// Text of the phrase a created-company variable captured: its last company
// unit if any, else its last noun run.
std::string HeadPhrase(const Sentence &sentence, int begin, int end);

// One tie-up per cluster that has a company set or attached concepts.
// Entities are numbered by first mention in the text.
TemplateGraph GenerateTemplates(const Document &doc,
                                const std::vector<TieUpCluster> &clusters,
                                const CompanyRegistry &registry,
                                const TemplateOptions &options = {});

}  // namespace tieup

#endif  // TIEUP_TEMPLATES_H_

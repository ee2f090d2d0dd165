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

#ifndef TIEUP_PATTERN_H_
#define TIEUP_PATTERN_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tieup/token.h"

namespace tieup {

enum class MatchMode { kStrict, kLoose };

struct PatternElement {
  enum class Kind { kVariable, kSkip, kLiteral };

  Kind kind = Kind::kLiteral;
  // Variables: the name as written (e.g. @CNAME_PARTNER_SUBJ) and the capture
  // slot, which gets a "#n" suffix for the n-th repeat of the same name.
  std::string name;
  std::string slot;
  // Literals.
  std::vector<std::string> alternatives;
  MatchMode mode = MatchMode::kStrict;
  std::string pos_tag;  // empty matches any tag

  bool is_variable() const { return kind == Kind::kVariable; }
  bool is_literal() const { return kind == Kind::kLiteral; }
  bool is_company_name() const {
    return is_variable() && name.starts_with("@CNAME");
  }

  bool operator==(const PatternElement &other) const = default;
};

struct PatternRule {
  std::string name;
  std::string group;    // name without trailing digits
  std::string concept_label;  // group after the concept map; defaults to group
  int index_field = 1;  // 1-based
  std::vector<PatternElement> elements;

  const PatternElement &index_element() const {
    return elements[index_field - 1];
  }
};

// Parses parenthesized rules `(Name index elem elem ...)`. Literals are
// `alt1|alt2:mode:POS` (mode may be empty, meaning strict) or a bare
// alternation without mode and tag. Unquoted words without a colon are joined
// with the following words up to the one carrying the `:mode:POS` suffix, so
// `a joint venture::NP` is one literal; double quotes also group words.
std::vector<PatternRule> ParsePatternFile(std::string_view text);

std::string ConceptGroup(std::string_view rule_name);

// `group<TAB>CONCEPT` lines.
std::map<std::string, std::string> ParseConceptMap(std::string_view text);
void ApplyConceptMap(const std::map<std::string, std::string> &concept_map,
                     std::vector<PatternRule> &rules);

// Tag comparison. Pattern tags are compared verbatim with the token tag and
// also through the short forms P, V, VN, N and PUNCT; NP accepts nouns and
// grouped name units.
bool PosMatches(std::string_view pattern_tag, std::string_view token_pos);

bool LiteralMatches(const PatternElement &literal, const Token &token);

// Half-open token range [begin, end) within a sentence.
struct Span {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool empty() const { return begin == end; }
  auto operator<=>(const Span &other) const = default;
};

struct PatternMatch {
  std::string rule_name;
  std::string group;
  std::string concept_label;
  int sent_index = 0;
  std::vector<Span> element_spans;   // parallel to the rule's elements
  std::map<std::string, Span> bindings;  // variable slot -> span (no @SKIP)
  int consumed = 0;
  int cname_filled = 0;
  int elements_matched = 0;
  int start = 0;  // first consumed token
  Span index_span;  // token matched by the index-field literal

  bool operator==(const PatternMatch &other) const = default;
};

struct MatchOptions {
  bool use_index_prefilter = true;
};

// Builds the PatternMatch record (statistics included) for one assignment of
// spans to rule elements. Does not check the element predicates.
PatternMatch MakeMatch(const PatternRule &rule, const Sentence &sentence,
                       std::vector<Span> spans);

// Every assignment of rule elements to consecutive token spans that satisfies
// the element predicates. Tokens before the first and after the last element
// are ignored.
std::vector<PatternMatch> MatchSentence(const Sentence &sentence,
                                        const std::vector<PatternRule> &rules,
                                        const MatchOptions &options = {});

enum class SelectionScope { kPerSentence, kPerConceptGroup };

// Best match per bucket: most filled company-name variables, then fewest
// consumed tokens, then most matched elements; remaining ties go to the
// earliest start, the smaller rule name, then the smaller span vector.
std::vector<PatternMatch> SelectBest(const std::vector<PatternMatch> &matches,
                                     SelectionScope scope);

// Strict ordering used by SelectBest within one bucket.
bool BetterMatch(const PatternMatch &a, const PatternMatch &b);

}  // namespace tieup

#endif  // TIEUP_PATTERN_H_

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

#include "tieup/pattern.h"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "tieup/error.h"
#include "tieup/utf8.h"

namespace tieup {

namespace {

struct Lexeme {
  enum class Type { kOpen, kClose, kWord };
  Type type;
  std::string text;
  int line;
};

std::vector<Lexeme> Lex(std::string_view text) {
  std::vector<Lexeme> out;
  int line = 1;
  size_t i = 0;
  bool at_line_start = true;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      at_line_start = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#' && at_line_start) {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    at_line_start = false;
    if (c == '(' || c == ')') {
      out.push_back({c == '(' ? Lexeme::Type::kOpen : Lexeme::Type::kClose,
                     std::string(1, c), line});
      ++i;
      continue;
    }
    std::string word;
    const int word_line = line;
    while (i < text.size()) {
      char d = text[i];
      if (d == '"') {
        size_t close = text.find('"', i + 1);
        if (close == std::string_view::npos) {
          throw ParseError("unterminated quote", word_line);
        }
        word.append(text.substr(i, close - i + 1));
        i = close + 1;
        continue;
      }
      if (d == ' ' || d == '\t' || d == '\r' || d == '\n' || d == '(' ||
          d == ')') {
        break;
      }
      word.push_back(d);
      ++i;
    }
    out.push_back({Lexeme::Type::kWord, std::move(word), word_line});
  }
  return out;
}

// Splits on `sep` outside double quotes.
std::vector<std::string> SplitOutsideQuotes(std::string_view s, char sep) {
  std::vector<std::string> parts(1);
  bool quoted = false;
  for (char c : s) {
    if (c == '"') {
      quoted = !quoted;
      parts.back().push_back(c);
    } else if (c == sep && !quoted) {
      parts.emplace_back();
    } else {
      parts.back().push_back(c);
    }
  }
  return parts;
}

std::string Unquote(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != '"') out.push_back(c);
  }
  return out;
}

bool HasColonOutsideQuotes(std::string_view s) {
  return SplitOutsideQuotes(s, ':').size() > 1;
}

PatternElement ParseLiteral(const std::string &spec, int line) {
  std::vector<std::string> fields = SplitOutsideQuotes(spec, ':');
  PatternElement el;
  el.kind = PatternElement::Kind::kLiteral;
  if (fields.size() == 3) {
    const std::string &mode = fields[1];
    if (mode.empty() || mode == "strict") {
      el.mode = MatchMode::kStrict;
    } else if (mode == "loose") {
      el.mode = MatchMode::kLoose;
    } else {
      throw ParseError("unknown match mode '" + mode + "'", line);
    }
    el.pos_tag = fields[2];
  } else if (fields.size() != 1) {
    throw ParseError("literal '" + spec + "' must be alt, or alt:mode:POS",
                     line);
  }
  for (const std::string &alt : SplitOutsideQuotes(fields[0], '|')) {
    std::string text = Unquote(alt);
    if (text.empty()) {
      throw ParseError("empty alternative in literal '" + spec + "'", line);
    }
    el.alternatives.push_back(std::move(text));
  }
  return el;
}

PatternRule ParseRule(const std::vector<Lexeme> &lex, size_t &pos) {
  const int open_line = lex[pos].line;
  ++pos;  // '('
  std::vector<const Lexeme *> words;
  while (true) {
    if (pos >= lex.size()) throw ParseError("unterminated rule", open_line);
    const Lexeme &l = lex[pos];
    if (l.type == Lexeme::Type::kOpen) {
      throw ParseError("nested '(' inside a rule", l.line);
    }
    ++pos;
    if (l.type == Lexeme::Type::kClose) break;
    words.push_back(&l);
  }
  if (words.empty()) throw ParseError("empty rule", open_line);
  if (words.size() < 2) {
    throw ParseError("rule " + words[0]->text + " has no index field",
                     open_line);
  }

  PatternRule rule;
  rule.name = words[0]->text;
  rule.group = ConceptGroup(rule.name);
  rule.concept_label = rule.group;
  const std::string &index_text = words[1]->text;
  auto [ptr, ec] = std::from_chars(
      index_text.data(), index_text.data() + index_text.size(),
      rule.index_field);
  if (ec != std::errc() || ptr != index_text.data() + index_text.size()) {
    throw ParseError("index field '" + index_text + "' is not an integer",
                     words[1]->line);
  }

  std::map<std::string, int> occurrences;
  size_t i = 2;
  while (i < words.size()) {
    const std::string &w = words[i]->text;
    const int line = words[i]->line;
    if (w.starts_with('@')) {
      PatternElement el;
      el.name = w;
      if (w == "@SKIP") {
        el.kind = PatternElement::Kind::kSkip;
        el.slot = w;
      } else {
        el.kind = PatternElement::Kind::kVariable;
        int n = ++occurrences[w];
        el.slot = n == 1 ? w : w + "#" + std::to_string(n);
      }
      rule.elements.push_back(std::move(el));
      ++i;
      continue;
    }
    std::string spec = w;
    ++i;
    while (!HasColonOutsideQuotes(spec) && i < words.size() &&
           !words[i]->text.starts_with('@')) {
      spec += ' ';
      spec += words[i]->text;
      ++i;
    }
    rule.elements.push_back(ParseLiteral(spec, line));
  }

  if (rule.elements.empty()) {
    throw ParseError("rule " + rule.name + " has no elements", open_line);
  }
  if (rule.index_field < 1 ||
      rule.index_field > static_cast<int>(rule.elements.size())) {
    throw ParseError("index field " + std::to_string(rule.index_field) +
                         " out of range for rule " + rule.name,
                     open_line);
  }
  if (!rule.index_element().is_literal()) {
    throw ParseError("index field of rule " + rule.name +
                         " must point at a literal",
                     open_line);
  }
  return rule;
}

std::string_view CanonicalTag(std::string_view tag) {
  if (tag == "P") return pos::kParticle;
  if (tag == "V") return pos::kVerb;
  if (tag == "VN") return pos::kVerbalNominal;
  if (tag == "N") return pos::kNoun;
  if (tag == "PUNCT") return pos::kPunct;
  return tag;
}

// Minimum number of tokens elements [i, end) can consume.
std::vector<int> MinRemaining(const PatternRule &rule) {
  std::vector<int> need(rule.elements.size() + 1, 0);
  for (size_t i = rule.elements.size(); i-- > 0;) {
    need[i] = need[i + 1] +
              (rule.elements[i].kind == PatternElement::Kind::kSkip ? 0 : 1);
  }
  return need;
}

class Enumerator {
 public:
  Enumerator(const PatternRule &rule, const Sentence &sentence,
             std::vector<PatternMatch> &out)
      : rule_(rule),
        sentence_(sentence),
        out_(out),
        n_(static_cast<int>(sentence.size())),
        need_(MinRemaining(rule)),
        spans_(rule.elements.size()) {}

  void Run() {
    for (int start = 0; start <= n_; ++start) Visit(0, start);
  }

 private:
  void Visit(size_t el, int at) {
    if (el == rule_.elements.size()) {
      out_.push_back(MakeMatch(rule_, sentence_, spans_));
      return;
    }
    if (at + need_[el] > n_) return;
    const PatternElement &e = rule_.elements[el];
    switch (e.kind) {
      case PatternElement::Kind::kLiteral:
        if (LiteralMatches(e, sentence_[at])) {
          spans_[el] = Span{at, at + 1};
          Visit(el + 1, at + 1);
        }
        break;
      case PatternElement::Kind::kSkip:
      case PatternElement::Kind::kVariable: {
        const int min_len = e.kind == PatternElement::Kind::kSkip ? 0 : 1;
        for (int end = at + min_len; end + need_[el + 1] <= n_; ++end) {
          spans_[el] = Span{at, end};
          Visit(el + 1, end);
        }
        break;
      }
    }
  }

  const PatternRule &rule_;
  const Sentence &sentence_;
  std::vector<PatternMatch> &out_;
  const int n_;
  const std::vector<int> need_;
  std::vector<Span> spans_;
};

}  // namespace

std::vector<PatternRule> ParsePatternFile(std::string_view text) {
  std::vector<Lexeme> lex = Lex(text);
  std::vector<PatternRule> rules;
  size_t pos = 0;
  while (pos < lex.size()) {
    if (lex[pos].type != Lexeme::Type::kOpen) {
      throw ParseError("expected '(' to start a rule, got '" + lex[pos].text +
                           "'",
                       lex[pos].line);
    }
    rules.push_back(ParseRule(lex, pos));
  }
  return rules;
}

std::string ConceptGroup(std::string_view rule_name) {
  size_t end = rule_name.size();
  while (end > 0 && rule_name[end - 1] >= '0' && rule_name[end - 1] <= '9') {
    --end;
  }
  return std::string(rule_name.substr(0, end));
}

std::map<std::string, std::string> ParseConceptMap(std::string_view text) {
  std::map<std::string, std::string> map;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("expected 'group<TAB>CONCEPT'", line_no);
    }
    std::string group(Trim(line.substr(0, tab)));
    std::string label(Trim(line.substr(tab + 1)));
    if (group.empty() || label.empty()) {
      throw ParseError("empty group or concept", line_no);
    }
    if (!map.emplace(group, label).second) {
      throw ParseError("duplicate group " + group, line_no);
    }
  }
  return map;
}

void ApplyConceptMap(const std::map<std::string, std::string> &concept_map,
                     std::vector<PatternRule> &rules) {
  for (PatternRule &rule : rules) {
    auto it = concept_map.find(rule.group);
    rule.concept_label = it == concept_map.end() ? rule.group : it->second;
  }
}

bool PosMatches(std::string_view pattern_tag, std::string_view token_pos) {
  if (pattern_tag.empty()) return true;
  if (pattern_tag == token_pos) return true;
  if (pattern_tag == "NP") {
    return token_pos == pos::kNoun || IsNameTag(token_pos);
  }
  return CanonicalTag(pattern_tag) == token_pos;
}

bool LiteralMatches(const PatternElement &literal, const Token &token) {
  if (!PosMatches(literal.pos_tag, token.pos)) return false;
  for (const std::string &alt : literal.alternatives) {
    if (literal.mode == MatchMode::kStrict ? token.surface == alt
                                           : token.surface.find(alt) !=
                                                 std::string::npos) {
      return true;
    }
  }
  return false;
}

PatternMatch MakeMatch(const PatternRule &rule, const Sentence &sentence,
                       std::vector<Span> spans) {
  PatternMatch m;
  m.rule_name = rule.name;
  m.group = rule.group;
  m.concept_label = rule.concept_label;
  m.sent_index = sentence.empty() ? 0 : sentence.front().sent_index;
  int first = -1;
  int last = -1;
  for (size_t i = 0; i < rule.elements.size(); ++i) {
    const PatternElement &e = rule.elements[i];
    const Span &s = spans[i];
    if (!s.empty()) {
      if (first < 0) first = s.begin;
      last = s.end;
      if (e.kind != PatternElement::Kind::kSkip) ++m.elements_matched;
    }
    if (e.is_variable()) {
      m.bindings[e.slot] = s;
      if (e.is_company_name()) {
        for (int t = s.begin; t < s.end; ++t) {
          if (sentence[t].pos == pos::kCompany) {
            ++m.cname_filled;
            break;
          }
        }
      }
    }
  }
  m.index_span = spans[rule.index_field - 1];
  m.start = first < 0 ? 0 : first;
  m.consumed = first < 0 ? 0 : last - first;
  m.element_spans = std::move(spans);
  return m;
}

std::vector<PatternMatch> MatchSentence(const Sentence &sentence,
                                        const std::vector<PatternRule> &rules,
                                        const MatchOptions &options) {
  std::vector<PatternMatch> matches;
  for (const PatternRule &rule : rules) {
    if (options.use_index_prefilter) {
      const PatternElement &index = rule.index_element();
      bool present = std::any_of(
          sentence.begin(), sentence.end(),
          [&](const Token &t) { return LiteralMatches(index, t); });
      if (!present) continue;
    }
    Enumerator(rule, sentence, matches).Run();
  }
  return matches;
}

bool BetterMatch(const PatternMatch &a, const PatternMatch &b) {
  if (a.cname_filled != b.cname_filled) return a.cname_filled > b.cname_filled;
  if (a.consumed != b.consumed) return a.consumed < b.consumed;
  if (a.elements_matched != b.elements_matched) {
    return a.elements_matched > b.elements_matched;
  }
  return std::tie(a.start, a.rule_name, a.concept_label, a.element_spans) <
         std::tie(b.start, b.rule_name, b.concept_label, b.element_spans);
}

std::vector<PatternMatch> SelectBest(const std::vector<PatternMatch> &matches,
                                     SelectionScope scope) {
  std::map<std::pair<int, std::string>, const PatternMatch *> best;
  for (const PatternMatch &m : matches) {
    std::pair<int, std::string> key{
        m.sent_index,
        scope == SelectionScope::kPerConceptGroup ? m.concept_label : std::string()};
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), &m);
    } else if (BetterMatch(m, *it->second)) {
      it->second = &m;
    }
  }
  std::vector<PatternMatch> out;
  out.reserve(best.size());
  for (const auto &[key, m] : best) out.push_back(*m);
  return out;
}

}  // namespace tieup

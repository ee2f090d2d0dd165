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

#include "tieup/concept_search.h"

#include <stdexcept>

#include "tieup/error.h"
#include "tieup/utf8.h"

namespace tieup {

namespace {

Keyword ParseKeyword(std::string_view word) {
  Keyword kw;
  if (word.starts_with('>')) {
    kw.anchor_begin = true;
    word.remove_prefix(1);
  }
  if (word.ends_with('<')) {
    kw.anchor_end = true;
    word.remove_suffix(1);
  }
  kw.text = std::string(word);
  return kw;
}

}  // namespace

std::string Keyword::ToString() const {
  std::string s;
  if (anchor_begin) s += '>';
  s += text;
  if (anchor_end) s += '<';
  return s;
}

bool Keyword::Matches(std::string_view word) const {
  if (anchor_begin && anchor_end) return word == text;
  if (anchor_begin) return word.starts_with(text);
  if (anchor_end) return word.ends_with(text);
  return word.find(text) != std::string_view::npos;
}

void ConceptLexicon::Add(ConceptEntry entry) {
  if (entry.name.empty()) throw std::invalid_argument("empty concept name");
  if (entry.keywords.empty()) {
    throw std::invalid_argument("concept " + entry.name + " has no keywords");
  }
  for (const Keyword &kw : entry.keywords) {
    if (kw.text.empty()) {
      throw std::invalid_argument("concept " + entry.name +
                                  " has an empty keyword");
    }
  }
  for (const ConceptEntry &e : entries_) {
    if (e.name == entry.name) {
      throw std::invalid_argument("duplicate concept " + entry.name);
    }
  }
  entries_.push_back(std::move(entry));
}

ConceptLexicon ParseConceptLexicon(std::string_view text) {
  ConceptLexicon lexicon;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.front() != '(' || line.back() != ')') {
      throw ParseError("unbalanced parentheses", line_no);
    }
    std::string_view body = line.substr(1, line.size() - 2);
    if (body.find_first_of("()") != std::string_view::npos) {
      throw ParseError("unbalanced parentheses", line_no);
    }
    std::vector<std::string> words = SplitWhitespace(body);
    if (words.empty()) throw ParseError("empty concept entry", line_no);
    ConceptEntry entry{words[0], {}};
    for (size_t i = 1; i < words.size(); ++i) {
      entry.keywords.push_back(ParseKeyword(words[i]));
    }
    try {
      lexicon.Add(std::move(entry));
    } catch (const std::invalid_argument &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return lexicon;
}

std::vector<CompoundRun> CompoundRuns(const Sentence &sentence) {
  std::vector<CompoundRun> runs;
  size_t i = 0;
  while (i < sentence.size()) {
    CompoundRun run{sentence[i].surface, sentence[i].tok_index, 1};
    size_t j = i + 1;
    if (IsNounLikeTag(sentence[i].pos)) {
      while (j < sentence.size() && IsNounLikeTag(sentence[j].pos)) {
        run.text += sentence[j].surface;
        ++run.count;
        ++j;
      }
    }
    runs.push_back(std::move(run));
    i = j;
  }
  return runs;
}

std::vector<ConceptHit> FindConcepts(const Sentence &sentence,
                                     const ConceptLexicon &lexicon) {
  std::vector<ConceptHit> hits;
  if (lexicon.empty() || sentence.empty()) return hits;
  const int sent_index = sentence.front().sent_index;
  for (const CompoundRun &run : CompoundRuns(sentence)) {
    for (const ConceptEntry &entry : lexicon.entries()) {
      for (const Keyword &kw : entry.keywords) {
        if (kw.Matches(run.text)) {
          hits.push_back(ConceptHit{entry.name, sent_index, run.text, run.start,
                                    kw.ToString()});
          break;
        }
      }
    }
  }
  return hits;
}

}  // namespace tieup

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

#include "tieup/token.h"

#include <stdexcept>

#include "tieup/error.h"
#include "tieup/utf8.h"

namespace tieup {

namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // A trailing newline does not open another line.
  if (!lines.empty() && lines.back().empty() && !text.empty() &&
      text.back() == '\n') {
    lines.pop_back();
  }
  return lines;
}

bool IsDigitString(std::string_view surface) {
  if (surface.empty()) return false;
  std::u32string chars;
  try {
    chars = DecodeUtf8(surface);
  } catch (const std::invalid_argument &) {
    return false;
  }
  for (char32_t c : chars) {
    bool ascii = c >= U'0' && c <= U'9';
    bool wide = c >= U'０' && c <= U'９';
    if (!ascii && !wide) return false;
  }
  return true;
}

// Tokens a name may absorb when extending backward from a designator.
bool CanExtendName(const Token &token) {
  if (token.surface == kNameConnector) return true;
  if (IsDigitString(token.surface)) return false;
  return token.pos == pos::kNoun || token.pos == pos::kUnknown ||
         IsNameTag(token.pos);
}

}  // namespace

bool IsNameTag(std::string_view tag) {
  return tag == pos::kCompany || tag == pos::kPerson || tag == pos::kPlace;
}

bool IsNounLikeTag(std::string_view tag) {
  return tag == pos::kNoun || tag == pos::kVerbalNominal ||
         tag == pos::kUnknown || IsNameTag(tag);
}

int Document::num_tokens() const {
  int n = 0;
  for (const Sentence &s : sentences) n += static_cast<int>(s.size());
  return n;
}

std::string Document::Text() const {
  std::string text;
  for (const Sentence &s : sentences) {
    for (const Token &t : s) text += t.surface;
  }
  return text;
}

void Document::Renumber() {
  for (size_t s = 0; s < sentences.size(); ++s) {
    for (size_t t = 0; t < sentences[s].size(); ++t) {
      sentences[s][t].sent_index = static_cast<int>(s);
      sentences[s][t].tok_index = static_cast<int>(t);
    }
  }
}

std::vector<Document> ParseTokenFile(std::string_view text) {
  std::vector<Document> docs;
  std::vector<std::string_view> lines = SplitLines(text);
  bool in_doc = false;
  Document current;
  Sentence sentence;
  int doc_line = 0;

  auto close_sentence = [&]() {
    if (!sentence.empty()) {
      current.sentences.push_back(std::move(sentence));
      sentence.clear();
    }
  };

  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (line.starts_with("#DOC")) {
      if (in_doc) throw ParseError("#DOC inside an open document", line_no);
      std::string_view id = Trim(line.substr(4));
      if (id.empty() || (line.size() > 4 && line[4] != ' ' && line[4] != '\t')) {
        throw ParseError("#DOC header needs a document id", line_no);
      }
      current = Document{std::string(id), {}};
      in_doc = true;
      doc_line = line_no;
      continue;
    }
    if (line == "#END") {
      if (!in_doc) throw ParseError("#END without #DOC", line_no);
      close_sentence();
      if (current.sentences.empty()) {
        throw ParseError("empty document '" + current.doc_id + "'", line_no);
      }
      current.Renumber();
      docs.push_back(std::move(current));
      current = Document();
      in_doc = false;
      continue;
    }
    if (Trim(line).empty()) {
      if (in_doc) close_sentence();
      continue;
    }
    if (!in_doc) throw ParseError("token line outside a #DOC block", line_no);

    size_t tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError("expected 2 tab-separated fields", line_no);
    }
    std::string_view surface = line.substr(0, tab);
    std::string_view tag = line.substr(tab + 1);
    if (surface.empty() || tag.empty()) {
      throw ParseError("empty surface or tag", line_no);
    }
    sentence.push_back(Token{std::string(surface), std::string(tag), 0, 0});
  }
  if (in_doc) {
    throw ParseError("document '" + current.doc_id + "' opened at line " +
                         std::to_string(doc_line) + " is missing #END",
                     static_cast<int>(lines.size()));
  }
  return docs;
}

Document ParseDocument(std::string_view text) {
  std::vector<Document> docs = ParseTokenFile(text);
  if (docs.size() != 1) {
    throw ParseError("expected exactly one document, found " +
                         std::to_string(docs.size()),
                     0);
  }
  return std::move(docs.front());
}

std::string SerializeDocument(const Document &doc) {
  std::string out = "#DOC " + doc.doc_id + "\n";
  for (const Sentence &s : doc.sentences) {
    for (const Token &t : s) {
      out += t.surface;
      out += '\t';
      out += t.pos;
      out += '\n';
    }
    out += '\n';
  }
  out += "#END\n";
  return out;
}

std::string SerializeDocuments(const std::vector<Document> &docs) {
  std::string out;
  for (const Document &doc : docs) out += SerializeDocument(doc);
  return out;
}

std::string_view NameTypeTag(NameType type) {
  switch (type) {
    case NameType::kCompany:
      return pos::kCompany;
    case NameType::kPerson:
      return pos::kPerson;
    case NameType::kPlace:
      return pos::kPlace;
    case NameType::kStop:
      return "stop";
  }
  return "";
}

void DesignatorLexicon::Add(std::string designator, NameType type) {
  if (designator.empty()) throw std::invalid_argument("empty designator");
  auto [it, inserted] = entries_.emplace(std::move(designator), type);
  if (!inserted) {
    throw std::invalid_argument("duplicate designator '" + it->first + "'");
  }
}

const std::pair<const std::string, NameType> *DesignatorLexicon::LongestSuffix(
    std::string_view surface) const {
  const std::pair<const std::string, NameType> *best = nullptr;
  for (const auto &entry : entries_) {
    if (surface.ends_with(entry.first) &&
        (best == nullptr || entry.first.size() > best->first.size())) {
      best = &entry;
    }
  }
  return best;
}

bool DesignatorLexicon::IsDesignator(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  return it != entries_.end() && it->second != NameType::kStop;
}

DesignatorLexicon ParseDesignatorLexicon(std::string_view text) {
  DesignatorLexicon lexicon;
  std::vector<std::string_view> lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("expected 'surface<TAB>type'", line_no);
    }
    std::string surface(Trim(line.substr(0, tab)));
    std::string_view type = Trim(line.substr(tab + 1));
    NameType name_type;
    if (type == "company") {
      name_type = NameType::kCompany;
    } else if (type == "person") {
      name_type = NameType::kPerson;
    } else if (type == "place") {
      name_type = NameType::kPlace;
    } else if (type == "stop") {
      name_type = NameType::kStop;
    } else {
      throw ParseError("unknown designator type '" + std::string(type) + "'",
                       line_no);
    }
    try {
      lexicon.Add(std::move(surface), name_type);
    } catch (const std::invalid_argument &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return lexicon;
}

Document RecognizeNames(const Document &doc, const DesignatorLexicon &lexicon) {
  Document out{doc.doc_id, {}};
  for (const Sentence &sentence : doc.sentences) {
    Sentence result;
    size_t i = 0;
    while (i < sentence.size()) {
      const Token &token = sentence[i];
      // Only untagged nouns are candidates; names the tokenizer already
      // recognized are kept as they are.
      const bool candidate =
          token.pos == pos::kNoun || token.pos == pos::kUnknown;
      const auto *entry =
          candidate ? lexicon.LongestSuffix(token.surface) : nullptr;
      if (entry == nullptr || entry->second == NameType::kStop) {
        result.push_back(token);
        ++i;
        continue;
      }

      size_t begin = result.size();
      while (begin > 0 && CanExtendName(result[begin - 1])) --begin;
      while (begin < result.size() && result[begin].surface == kNameConnector) {
        ++begin;
      }
      std::string surface;
      for (size_t k = begin; k < result.size(); ++k) {
        surface += result[k].surface;
      }
      surface += token.surface;
      result.resize(begin);

      size_t next = i + 1;
      while (next < sentence.size() &&
             (sentence[next].pos == pos::kNoun ||
              sentence[next].pos == pos::kUnknown) &&
             lexicon.IsDesignator(sentence[next].surface)) {
        surface += sentence[next].surface;
        ++next;
      }
      result.push_back(
          Token{std::move(surface), std::string(NameTypeTag(entry->second)),
                token.sent_index, 0});
      i = next;
    }
    out.sentences.push_back(std::move(result));
  }
  out.Renumber();
  return out;
}

Document GroupSegments(const Document &doc) {
  Document out{doc.doc_id, {}};
  for (const Sentence &sentence : doc.sentences) {
    Sentence result;
    size_t i = 0;
    while (i < sentence.size()) {
      if (!IsNameTag(sentence[i].pos)) {
        result.push_back(sentence[i]);
        ++i;
        continue;
      }
      Token unit = sentence[i];
      size_t j = i + 1;
      while (j < sentence.size()) {
        if (IsNameTag(sentence[j].pos)) {
          unit.surface += sentence[j].surface;
          unit.pos = sentence[j].pos;
          ++j;
        } else if (sentence[j].surface == kNameConnector &&
                   j + 1 < sentence.size() && IsNameTag(sentence[j + 1].pos)) {
          unit.surface += sentence[j].surface;
          unit.surface += sentence[j + 1].surface;
          unit.pos = sentence[j + 1].pos;
          j += 2;
        } else {
          break;
        }
      }
      result.push_back(std::move(unit));
      i = j;
    }
    out.sentences.push_back(std::move(result));
  }
  out.Renumber();
  return out;
}

}  // namespace tieup

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

#ifndef TIEUP_TOKEN_H_
#define TIEUP_TOKEN_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tieup {

// Reserved part-of-speech tags. The tag vocabulary is open; tags outside this
// list are carried through untouched.
namespace pos {
inline constexpr std::string_view kNoun = "noun";
inline constexpr std::string_view kVerbalNominal = "verbal-nominal";
inline constexpr std::string_view kVerb = "verb";
inline constexpr std::string_view kParticle = "particle";
inline constexpr std::string_view kPunct = "punct";
inline constexpr std::string_view kCompany = "company";
inline constexpr std::string_view kPerson = "person";
inline constexpr std::string_view kPlace = "place";
inline constexpr std::string_view kUnknown = "unknown";
inline constexpr std::string_view kOther = "other";
}  // namespace pos

// Connector joining the parts of a foreign name, e.g. メルセデス・ベンツ.
inline constexpr std::string_view kNameConnector = "・";

bool IsNameTag(std::string_view tag);      // company, person or place
bool IsNounLikeTag(std::string_view tag);  // noun, verbal-nominal, unknown, names

struct Token {
  std::string surface;
  std::string pos;
  int sent_index = 0;
  int tok_index = 0;

  bool operator==(const Token &other) const = default;
};

using Sentence = std::vector<Token>;

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;

  bool operator==(const Document &other) const = default;

  int num_tokens() const;
  // Concatenation of every surface in order.
  std::string Text() const;
  // Rewrites sent_index/tok_index so they are dense and 0-based.
  void Renumber();
};

// Token file reader. One Document per `#DOC <id>` ... `#END` block; tokens
// are `surface<TAB>pos` lines and a blank line closes a sentence. Throws
// ParseError naming the offending line.
std::vector<Document> ParseTokenFile(std::string_view text);

// Same as ParseTokenFile but requires exactly one document.
Document ParseDocument(std::string_view text);

// Normalized token-file form: every sentence is followed by one blank line.
std::string SerializeDocument(const Document &doc);
std::string SerializeDocuments(const std::vector<Document> &docs);

enum class NameType { kCompany, kPerson, kPlace, kStop };

std::string_view NameTypeTag(NameType type);

// Suffixes signalling a proper name. A kStop entry blocks recognition for
// surfaces ending with it (会社, 同社, ...) when it is the longest matching
// suffix.
class DesignatorLexicon {
 public:
  // Throws std::invalid_argument on duplicate or empty designators.
  void Add(std::string designator, NameType type);

  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::map<std::string, NameType> &entries() const { return entries_; }

  // Longest entry that is a suffix of `surface`, or nullptr.
  const std::pair<const std::string, NameType> *LongestSuffix(
      std::string_view surface) const;

  // True if `surface` is exactly a designator (not a stop entry).
  bool IsDesignator(std::string_view surface) const;

 private:
  std::map<std::string, NameType> entries_;
};

// `surface<TAB>type` lines, type in {company, person, place, stop}; `#`
// starts a comment line.
DesignatorLexicon ParseDesignatorLexicon(std::string_view text);

// Merges every designator-bearing noun (or unknown) token with the adjacent
// name material into a single token typed by the designator. Tokens already
// tagged as names are left alone.
Document RecognizeNames(const Document &doc, const DesignatorLexicon &lexicon);

// Joins adjacent name units, optionally through the ・ connector, into one
// unit carrying the type of the last component.
Document GroupSegments(const Document &doc);

}  // namespace tieup

#endif  // TIEUP_TOKEN_H_

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
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "tieup/error.h"

namespace tieup {
namespace {

using testing::MakeSentence;

constexpr char kJapaneseRule[] = R"((JointVenture1 6
  @CNAME_PARTNER_SUBJ
  は|が:strict:P
  @CNAME_PARTNER_WITH
  と:strict:P
  @SKIP
  提携:loose:VN))";

constexpr char kEnglishRule[] = R"((JointVenture1 3
  @CNAME_PARTNER_SUBJ
  create::V
  a joint venture::NP
  with::P
  @CNAME_PARTNER_WITH))";

TEST(ParsePatternTest, JapaneseRule) {
  std::vector<PatternRule> rules = ParsePatternFile(kJapaneseRule);
  ASSERT_EQ(rules.size(), 1u);
  const PatternRule &r = rules[0];
  EXPECT_EQ(r.name, "JointVenture1");
  EXPECT_EQ(r.group, "JointVenture");
  EXPECT_EQ(r.index_field, 6);
  ASSERT_EQ(r.elements.size(), 6u);
  EXPECT_TRUE(r.elements[0].is_company_name());
  EXPECT_EQ(r.elements[1].alternatives,
            (std::vector<std::string>{"は", "が"}));
  EXPECT_EQ(r.elements[1].mode, MatchMode::kStrict);
  EXPECT_EQ(r.elements[1].pos_tag, "P");
  EXPECT_EQ(r.elements[4].kind, PatternElement::Kind::kSkip);
  EXPECT_EQ(r.index_element().alternatives,
            (std::vector<std::string>{"提携"}));
  EXPECT_EQ(r.index_element().mode, MatchMode::kLoose);
}

TEST(ParsePatternTest, EnglishRuleWithMultiWordLiteral) {
  PatternRule r = ParsePatternFile(kEnglishRule).at(0);
  ASSERT_EQ(r.elements.size(), 5u);
  EXPECT_EQ(r.index_element().alternatives,
            (std::vector<std::string>{"a joint venture"}));
  EXPECT_EQ(r.index_element().pos_tag, "NP");
  EXPECT_EQ(r.index_element().mode, MatchMode::kStrict);  // omitted mode
  EXPECT_EQ(r.elements[1].alternatives, (std::vector<std::string>{"create"}));
}

TEST(ParsePatternTest, QuotedAlternativesAndComments) {
  std::vector<PatternRule> rules = ParsePatternFile(
      "# leading comment\n(A1 1 \"x:y|z\":loose:N)\n# between\n(B 1 は)\n");
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0].elements[0].alternatives,
            (std::vector<std::string>{"x:y|z"}));
  EXPECT_EQ(rules[1].elements[0].pos_tag, "");
  EXPECT_EQ(rules[1].group, "B");
}

TEST(ParsePatternTest, RepeatedVariablesGetDistinctSlots) {
  PatternRule r = ParsePatternFile("(E 2 @CNAME_A は @CNAME_A @CNAME_A)").at(0);
  EXPECT_EQ(r.elements[0].slot, "@CNAME_A");
  EXPECT_EQ(r.elements[2].slot, "@CNAME_A#2");
  EXPECT_EQ(r.elements[3].slot, "@CNAME_A#3");
}

int ErrorLine(const std::string &text) {
  try {
    ParsePatternFile(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  return -1;
}

TEST(ParsePatternTest, Errors) {
  EXPECT_EQ(ErrorLine("(R 2 @SKIP)"), 1);             // index out of range
  EXPECT_EQ(ErrorLine("(R 0 は)"), 1);
  EXPECT_EQ(ErrorLine("\n(R 1 @X は)"), 2);           // index on a variable
  EXPECT_EQ(ErrorLine("(R 1 は:fuzzy:P)"), 1);        // unknown mode
  EXPECT_EQ(ErrorLine("()"), 1);                      // empty rule
  EXPECT_EQ(ErrorLine("(R)"), 1);                     // no index
  EXPECT_EQ(ErrorLine("(R x は)"), 1);                // non-integer index
  EXPECT_EQ(ErrorLine("(R 1)"), 1);                   // no elements
  EXPECT_EQ(ErrorLine("(R 1 は|:strict:P)"), 1);      // empty alternative
  EXPECT_EQ(ErrorLine("(R 1 は:strict)"), 1);         // two fields
  EXPECT_EQ(ErrorLine("(R 1 (は))"), 1);              // nested
  EXPECT_EQ(ErrorLine("(R 1\n は"), 1);               // unterminated
  EXPECT_EQ(ErrorLine("R 1 は"), 1);                  // no parenthesis
}

TEST(ConceptMapTest, MapsGroupsToLabels) {
  std::vector<PatternRule> rules =
      ParsePatternFile("(JointVenture1 1 提携)\n(Other2 1 は)");
  ApplyConceptMap(ParseConceptMap("# map\nJointVenture\tJOINT-VENTURE\n"),
                  rules);
  EXPECT_EQ(rules[0].concept_label, "JOINT-VENTURE");
  EXPECT_EQ(rules[1].concept_label, "Other");
  EXPECT_THROW(ParseConceptMap("A B\n"), ParseError);
  EXPECT_THROW(ParseConceptMap("A\tB\nA\tC\n"), ParseError);
}

TEST(PosMatchesTest, AliasesAndNounPhrases) {
  EXPECT_TRUE(PosMatches("", "verb"));
  EXPECT_TRUE(PosMatches("P", "particle"));
  EXPECT_TRUE(PosMatches("VN", "verbal-nominal"));
  EXPECT_TRUE(PosMatches("particle", "particle"));
  EXPECT_TRUE(PosMatches("NP", "company"));
  EXPECT_TRUE(PosMatches("NP", "noun"));
  EXPECT_FALSE(PosMatches("NP", "verb"));
  EXPECT_FALSE(PosMatches("P", "verb"));
}

constexpr char kTanabeS0[] =
    "田辺製薬/company は/particle 8日/noun 、/punct 西独/place の/particle "
    "医薬/noun メーカー/noun 、/punct エー・メルク社/company の/particle "
    "新薬/noun の/particle 日本/place 国内/noun で/particle の/particle "
    "開発/verbal-nominal 、/punct 販売/verbal-nominal を/particle する/verb "
    "提携/verbal-nominal 契約/noun を/particle 結ん/verb だ/other 。/punct";

constexpr char kTanabeS1[] =
    "新薬/noun の/particle 販売/verbal-nominal が/particle できる/verb "
    "よう/noun に/particle なる/verb 5/noun 、/punct 6/noun 年/noun 先/noun "
    "に/particle は/particle 、/punct 両社/noun が/particle 折半/noun "
    "出資/verbal-nominal し/verb て/particle 合弁/noun 会社/noun を/particle "
    "設立/verbal-nominal する/verb こと/noun も/particle 合意/verbal-nominal "
    "し/verb た/other 。/punct";

std::string Text(const Sentence &s, Span span) {
  std::string out;
  for (int t = span.begin; t < span.end; ++t) out += s[t].surface;
  return out;
}

TEST(MatchSentenceTest, EconomicActivityBindsBothCompanies) {
  std::vector<PatternRule> rules = ParsePatternFile(
      "(EconomicActivityE 6 @CNAME_PARTNER_SUBJ は|が:strict:P "
      "@CNAME_PARTNER_SUBJ の:strict:P @SKIP 開発:loose:VN)");
  Sentence s = MakeSentence(kTanabeS0);
  std::vector<PatternMatch> matches = MatchSentence(s, rules);
  ASSERT_FALSE(matches.empty());
  bool found = std::any_of(matches.begin(), matches.end(), [&](auto &m) {
    return Text(s, m.bindings.at("@CNAME_PARTNER_SUBJ")) == "田辺製薬" &&
           Text(s, m.bindings.at("@CNAME_PARTNER_SUBJ#2"))
               .ends_with("エー・メルク社");
  });
  EXPECT_TRUE(found);
  PatternMatch best = SelectBest(matches, SelectionScope::kPerSentence).at(0);
  EXPECT_EQ(best.cname_filled, 2);
  EXPECT_TRUE(Text(s, best.bindings.at("@CNAME_PARTNER_SUBJ#2"))
                  .ends_with("エー・メルク社"));
}

TEST(MatchSentenceTest, EstablishBindsPronounAndCreatedCompany) {
  std::vector<PatternRule> rules = ParsePatternFile(
      "(Establish3 6 @CNAME_PARTNER_SUBJ は|が:strict:P @CNAME_CREATED_OBJ "
      "を:strict:P @SKIP 設立:loose:VN)");
  Sentence s = MakeSentence(kTanabeS1);
  PatternMatch best =
      SelectBest(MatchSentence(s, rules), SelectionScope::kPerSentence).at(0);
  EXPECT_EQ(Text(s, best.bindings.at("@CNAME_PARTNER_SUBJ")), "両社");
  EXPECT_EQ(Text(s, best.bindings.at("@CNAME_CREATED_OBJ")),
            "折半出資して合弁会社");
  EXPECT_EQ(s[best.index_span.begin].surface, "設立");
}

TEST(MatchSentenceTest, NoIndexWordNoMatch) {
  std::vector<PatternRule> rules = ParsePatternFile(
      "(Establish3 6 @CNAME_PARTNER_SUBJ は|が:strict:P @CNAME_CREATED_OBJ "
      "を:strict:P @SKIP 設立:loose:VN)");
  Sentence s = MakeSentence(kTanabeS0);
  EXPECT_TRUE(MatchSentence(s, rules).empty());
  EXPECT_TRUE(MatchSentence(s, rules, MatchOptions{false}).empty());
}

TEST(MatchSentenceTest, TwoTopicMarkersMatchBruteForce) {
  std::vector<PatternRule> rules = ParsePatternFile(kJapaneseRule);
  Sentence s = MakeSentence(
      "X社/company は/particle Y社/company は/particle Z社/company と/particle "
      "業務/noun 提携/verbal-nominal");
  std::vector<PatternMatch> matches = MatchSentence(s, rules);
  EXPECT_EQ(testing::MatchKeys(matches), testing::BruteForceMatches(s, rules));
  EXPECT_EQ(matches.size(), testing::BruteForceMatches(s, rules).size());
}

TEST(MatchSentenceTest, MatchStatistics) {
  PatternRule rule =
      ParsePatternFile("(R 4 @CNAME_A は:strict:P @SKIP 提携:loose:VN)").at(0);
  Sentence s = MakeSentence(
      "当/noun X社/company は/particle 業務/noun 提携/verbal-nominal");
  PatternMatch m = MakeMatch(rule, s, {{0, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(m.cname_filled, 1);
  EXPECT_EQ(m.consumed, 5);
  EXPECT_EQ(m.elements_matched, 3);  // the skip does not count
  EXPECT_EQ(m.start, 0);
  PatternMatch empty_skip = MakeMatch(rule, s, {{1, 2}, {2, 3}, {3, 3}, {3, 4}});
  EXPECT_EQ(empty_skip.consumed, 3);
  EXPECT_EQ(empty_skip.start, 1);
}

TEST(MatchSentenceTest, RandomSentencesMatchBruteForce) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    Sentence s = testing::RandomSentence(rng, 10);
    std::vector<PatternRule> rules;
    for (int r = 0; r < 5; ++r) rules.push_back(testing::RandomRule(rng, r, 6));
    std::vector<PatternMatch> with = MatchSentence(s, rules);
    std::vector<PatternMatch> without =
        MatchSentence(s, rules, MatchOptions{false});
    auto oracle = testing::BruteForceMatches(s, rules);
    EXPECT_EQ(testing::MatchKeys(with), oracle);
    EXPECT_EQ(testing::MatchKeys(without), oracle);
    EXPECT_EQ(with.size(), oracle.size());  // no duplicates
    for (const PatternMatch &m : with) {
      const PatternRule &rule = *std::find_if(
          rules.begin(), rules.end(),
          [&](const PatternRule &r) { return r.name == m.rule_name; });
      for (size_t k = 0; k < rule.elements.size(); ++k) {
        EXPECT_TRUE(testing::ElementHolds(rule.elements[k], s,
                                          m.element_spans[k].begin,
                                          m.element_spans[k].end));
      }
      EXPECT_GE(m.consumed, m.elements_matched);
    }
  }
}

TEST(MatchSentenceTest, StrictImpliesLoose) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    PatternRule rule = testing::RandomRule(rng, 0, 1);
    PatternElement strict = rule.elements[0];
    strict.mode = MatchMode::kStrict;
    PatternElement loose = strict;
    loose.mode = MatchMode::kLoose;
    for (const Token &t : testing::RandomSentence(rng, 12)) {
      if (LiteralMatches(strict, t)) EXPECT_TRUE(LiteralMatches(loose, t));
    }
  }
}

// Builds a match record with chosen statistics for selection tests.
PatternMatch Stats(std::string rule, int cname, int consumed, int elements,
                   int start = 0, std::string label = "C") {
  PatternMatch m;
  m.rule_name = std::move(rule);
  m.concept_label = std::move(label);
  m.cname_filled = cname;
  m.consumed = consumed;
  m.elements_matched = elements;
  m.start = start;
  return m;
}

TEST(SelectBestTest, RuleOnePrefersMoreCompanyNames) {
  auto best = SelectBest({Stats("A", 1, 3, 5), Stats("B", 2, 9, 2)},
                         SelectionScope::kPerSentence);
  ASSERT_EQ(best.size(), 1u);
  EXPECT_EQ(best[0].rule_name, "B");
}

TEST(SelectBestTest, RuleTwoPrefersFewerSegments) {
  auto best = SelectBest({Stats("A", 1, 9, 5), Stats("B", 1, 5, 2)},
                         SelectionScope::kPerSentence);
  EXPECT_EQ(best.at(0).rule_name, "B");
}

TEST(SelectBestTest, RuleThreePrefersMoreElements) {
  auto best = SelectBest({Stats("A", 1, 5, 2), Stats("B", 1, 5, 3)},
                         SelectionScope::kPerSentence);
  EXPECT_EQ(best.at(0).rule_name, "B");
}

TEST(SelectBestTest, TieBreaksByPositionThenName) {
  EXPECT_EQ(SelectBest({Stats("A", 1, 5, 3, 4), Stats("B", 1, 5, 3, 2)},
                       SelectionScope::kPerSentence)
                .at(0)
                .rule_name,
            "B");
  EXPECT_EQ(SelectBest({Stats("B", 1, 5, 3), Stats("A", 1, 5, 3)},
                       SelectionScope::kPerSentence)
                .at(0)
                .rule_name,
            "A");
}

TEST(SelectBestTest, SingleAndEmpty) {
  EXPECT_TRUE(SelectBest({}, SelectionScope::kPerSentence).empty());
  auto best = SelectBest({Stats("A", 0, 1, 1)}, SelectionScope::kPerSentence);
  EXPECT_EQ(best.at(0).rule_name, "A");
}

TEST(SelectBestTest, OneWinnerPerConceptGroup) {
  std::vector<PatternMatch> matches = {Stats("A", 2, 5, 3, 0, "JV"),
                                       Stats("B", 1, 5, 3, 0, "EST"),
                                       Stats("C", 0, 5, 3, 0, "EST")};
  auto per_group = SelectBest(matches, SelectionScope::kPerConceptGroup);
  ASSERT_EQ(per_group.size(), 2u);
  auto per_sentence = SelectBest(matches, SelectionScope::kPerSentence);
  ASSERT_EQ(per_sentence.size(), 1u);
  EXPECT_EQ(per_sentence[0].rule_name, "A");
}

TEST(SelectBestTest, PermutationInvariant) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Sentence s = testing::RandomSentence(rng, 10);
    std::vector<PatternRule> rules;
    for (int r = 0; r < 4; ++r) rules.push_back(testing::RandomRule(rng, r, 5));
    std::vector<PatternMatch> matches = MatchSentence(s, rules);
    auto expected = SelectBest(matches, SelectionScope::kPerConceptGroup);
    std::shuffle(matches.begin(), matches.end(), rng);
    EXPECT_EQ(SelectBest(matches, SelectionScope::kPerConceptGroup), expected);
    std::reverse(matches.begin(), matches.end());
    EXPECT_EQ(SelectBest(matches, SelectionScope::kPerSentence),
              SelectBest(expected, SelectionScope::kPerSentence));
  }
}

}  // namespace
}  // namespace tieup

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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "tieup/error.h"
#include "tieup/lcs.h"
#include "tieup/utf8.h"

namespace tieup {
namespace {

using testing::MakeDocument;
using testing::MakeSentence;

// Registry of single-sentence names in order, each tagged company.
CompanyRegistry Names(const std::vector<std::string> &names) {
  std::string tagged;
  for (const std::string &n : names) tagged += n + "/company と/particle ";
  return UnifyCompanyReferences(
      BuildRegistry(MakeDocument("d", {tagged}), DiscourseConfig{}));
}

std::vector<int> Ids(const CompanyRegistry &registry) {
  std::vector<int> ids;
  for (const RegistryEntry &e : registry.entries()) ids.push_back(e.id);
  return ids;
}

TEST(IdSetTest, SetOperations) {
  EXPECT_EQ(MakeIdSet({3, 1, 3, 2}), (IdSet{1, 2, 3}));
  EXPECT_EQ(Union({1, 4}, {2, 4}), (IdSet{1, 2, 4}));
  EXPECT_TRUE(Intersects({1, 4}, {4, 9}));
  EXPECT_FALSE(Intersects({1, 4}, {}));
}

TEST(DiscourseConfigTest, ParsesAndRejectsUnknownKeys) {
  DiscourseConfig config = ParseDiscourseConfig(
      "# c\nsubject_markers = が は\nboth_pronoun = 両者\n"
      "tieup_concepts = JV\n");
  EXPECT_EQ(config.subject_markers, (std::vector<std::string>{"が", "は"}));
  EXPECT_TRUE(config.IsPronoun("両者"));
  EXPECT_FALSE(config.IsPronoun("両社"));
  EXPECT_TRUE(config.IsTieupConcept("JV"));
  EXPECT_THROW(ParseDiscourseConfig("colour = red\n"), ParseError);
  EXPECT_THROW(ParseDiscourseConfig("subject_markers\n"), ParseError);
}

TEST(UnifyTest, AbbreviationPairsFromNewsText) {
  EXPECT_EQ(Ids(Names({"メルセデス・ベンツ", "ベンツ"})), (std::vector<int>{1, 1}));
  EXPECT_EQ(Ids(Names({"新日本製鉄", "新日鉄"})), (std::vector<int>{1, 1}));
  EXPECT_EQ(Ids(Names({"アメリカン・エクスプレス社", "ア社"})),
            (std::vector<int>{1, 1}));
  EXPECT_EQ(Ids(Names({"X商事", "Y銀行"})), (std::vector<int>{1, 2}));
}

TEST(UnifyTest, EnglishWordInsideName) {
  CompanyRegistry r = Names({"日本電信電話(NTT)", "NTT"});
  ASSERT_EQ(r.size(), 3);
  EXPECT_EQ(r.entry(1).surface, "NTT");  // alias lifted out of the name
  EXPECT_TRUE(r.entry(1).eg);
  EXPECT_EQ(r.entry(1).alias_of, 2);
  EXPECT_TRUE(r.entry(3).eg);
  EXPECT_EQ(Ids(r), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(r.CanonicalName(1), "日本電信電話(NTT)");
  EXPECT_EQ(r.Aliases(1), (std::vector<std::string>{"NTT"}));
}

TEST(UnifyTest, EnglishSourceNeedsExactEquality) {
  // An English source only unifies with an identical word.
  EXPECT_EQ(Ids(Names({"NTT", "NT"})), (std::vector<int>{1, 2}));
  EXPECT_EQ(Ids(Names({"IBM", "IBM"})), (std::vector<int>{1, 1}));
}

TEST(UnifyTest, SingleCharactersNeverUnify) {
  EXPECT_EQ(Ids(Names({"X", "X"})), (std::vector<int>{1, 2}));
  EXPECT_EQ(Ids(Names({"日本", "日"})), (std::vector<int>{1, 2}));
}

TEST(UnifyTest, LaterNamesDoNotAbbreviateEarlier) {
  EXPECT_EQ(Ids(Names({"ベンツ", "メルセデス・ベンツ"})), (std::vector<int>{1, 2}));
}

TEST(UnifyTest, RegistrySkipsPronounsAndOrdinaryNouns) {
  CompanyRegistry r = BuildRegistry(
      MakeDocument("d", {"X社/company は/particle 同社/noun と/particle "
                         "エー/unknown 製品/noun 日本/place"}),
      DiscourseConfig{});
  ASSERT_EQ(r.size(), 3);
  EXPECT_EQ(r.entry(2).surface, "エー");
  EXPECT_EQ(r.entry(3).pos, "place");
  EXPECT_EQ(r.entry(3).position, (TextPosition{0, 6}));
  EXPECT_EQ(r.EntryAt(0, 6), 3);
  EXPECT_EQ(r.IdAt(0, 2), 0);
}

TEST(UnifyTest, MatchesLiteralScanOnRandomRegistries) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    CompanyRegistry full = testing::RandomRegistry(rng, 8);
    std::vector<RegistryEntry> plain;
    for (RegistryEntry e : full.entries()) {
      if (e.alias_of != 0) continue;
      plain.push_back(e);
    }
    CompanyRegistry r(plain);
    std::vector<std::string> strings;
    std::vector<bool> eg;
    for (const RegistryEntry &e : r.entries()) {
      strings.push_back(e.surface);
      eg.push_back(e.eg);
    }
    EXPECT_EQ(Ids(UnifyCompanyReferences(r)),
              testing::LiteralAbbreviationScan(strings, eg));
  }
}

TEST(UnifyTest, FixpointAndNoForwardReferences) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    CompanyRegistry initial = testing::RandomRegistry(rng, 10);
    CompanyRegistry once = UnifyCompanyReferences(initial);
    EXPECT_EQ(UnifyCompanyReferences(once), once);
    CompanyRegistry again = once;
    FindAbbreviations(again);
    EXPECT_EQ(again, once);
    for (int i = 1; i <= once.size(); ++i) {
      const RegistryEntry &e = once.entry(i);
      EXPECT_GE(e.id, 1);
      EXPECT_LE(e.id, i);
      if (e.id == i) continue;
      // Rewritten ids satisfy the abbreviation test against their root,
      // unless the class was joined through an English word lifted out of a
      // longer name.
      bool alias_class = false;
      for (const RegistryEntry &o : once.entries()) {
        if (o.id == e.id && o.alias_of != 0) alias_class = true;
      }
      if (alias_class) continue;
      const RegistryEntry &root = once.entry(e.id);
      int lcs = LcsLength(root.surface, e.surface);
      EXPECT_GE(lcs, 2);
      EXPECT_EQ(lcs, static_cast<int>(Utf8Length(e.surface)));
    }
  }
}

Document PronounDocA() {
  return MakeDocument(
      "a", {"X社/company は/particle Y社/company と/particle "
            "提携/verbal-nominal し/verb 、/punct 同社/noun の/particle "
            "製品/noun を/particle 自社/noun ブランド/noun で/particle "
            "販売/verbal-nominal する/verb 。/punct"});
}

TEST(TopicTest, SubjectMarkersAndInheritance) {
  Document doc = MakeDocument(
      "t", {"X社/company は/particle 最大手/noun 。/punct",
            "同社/noun の/particle 社長/noun は/particle 鈴木氏/person 。/punct",
            "提携先/noun は/particle Z社/company 。/punct",
            "Y社/company も/particle 参加/verbal-nominal 。/punct"});
  DiscourseConfig config;
  CompanyRegistry r = UnifyCompanyReferences(BuildRegistry(doc, config));
  TopicState topics = TrackTopics(doc, r, config);
  const int x = r.IdAt(0, 0);
  const int y = r.IdAt(3, 0);
  EXPECT_EQ(topics.topics[0], (IdSet{x}));
  EXPECT_FALSE(topics.inherited[0]);
  EXPECT_EQ(topics.topics[1], (IdSet{x}));
  EXPECT_TRUE(topics.inherited[1]);
  EXPECT_EQ(topics.topics[2], (IdSet{x}));  // Z社 is not followed by a marker
  EXPECT_EQ(topics.topics[3], (IdSet{y}));
}

TEST(TopicTest, FirstSentenceWithoutTopic) {
  Document doc = MakeDocument("t", {"提携/noun 。/punct"});
  DiscourseConfig config;
  TopicState topics =
      TrackTopics(doc, BuildRegistry(doc, config), config);
  EXPECT_TRUE(topics.topics[0].empty());
  EXPECT_FALSE(topics.inherited[0]);
}

std::vector<PronounReference> Resolve(const Document &doc,
                                      const std::vector<IdSet> &tieups,
                                      CompanyRegistry *registry_out) {
  DiscourseConfig config;
  CompanyRegistry r = UnifyCompanyReferences(BuildRegistry(doc, config));
  TopicState topics = TrackTopics(doc, r, config);
  *registry_out = r;
  return ResolvePronouns(doc, r, topics, tieups, config);
}

TEST(PronounTest, NearestCompanyAndTopic) {
  Document doc = PronounDocA();
  CompanyRegistry r;
  auto refs = Resolve(doc, {{}}, &r);
  ASSERT_EQ(refs.size(), 2u);
  EXPECT_EQ(refs[0].surface, "同社");
  EXPECT_EQ(refs[0].referents, (IdSet{r.IdAt(0, 2)}));  // Y社
  EXPECT_EQ(refs[1].surface, "自社");
  EXPECT_EQ(refs[1].referents, (IdSet{r.IdAt(0, 0)}));  // X社
}

TEST(PronounTest, SameCompanyFallsBackToInheritedTopic) {
  Document doc = MakeDocument(
      "b", {"X社/company は/particle この/other 分野/noun で/particle "
            "は/particle 最大手/noun 。/punct",
            "同社/noun の/particle 社長/noun は/particle 鈴木氏/person 。/punct"});
  CompanyRegistry r;
  auto refs = Resolve(doc, {{}, {}}, &r);
  ASSERT_EQ(refs.size(), 1u);
  EXPECT_EQ(refs[0].referents, (IdSet{r.IdAt(0, 0)}));
}

TEST(PronounTest, BothCompaniesNeedCurrentTieup) {
  Document doc = MakeDocument(
      "c", {"X社/company と/particle Y社/company 。/punct",
            "両社/noun は/particle 提携/verbal-nominal 。/punct"});
  CompanyRegistry r;
  auto unresolved = Resolve(doc, {{}, {}}, &r);
  EXPECT_TRUE(unresolved.at(0).referents.empty());
  IdSet pair = {r.IdAt(0, 0), r.IdAt(0, 2)};
  auto resolved = Resolve(doc, {{}, pair}, &r);
  EXPECT_EQ(resolved.at(0).referents, pair);
}

// Pattern-style tie-up instance in sentence `sent` with partners `ids`.
ConceptInstance TieUp(int sent, IdSet ids, std::string label = "JOINT-VENTURE") {
  ConceptInstance c;
  c.label = std::move(label);
  c.sent_index = sent;
  c.source = ConceptSource::kPattern;
  c.partner_ids = ids;
  c.subject_ids = ids;
  return c;
}

Document Sentences(int n) {
  Document doc{"s", {}};
  for (int s = 0; s < n; ++s) doc.sentences.push_back(MakeSentence("。/punct", s));
  return doc;
}

TEST(SegmentTest, SplitsWhenPartnersChange) {
  auto segments = SegmentDiscourse(
      Sentences(3), {TieUp(0, {1, 2}), TieUp(2, {1, 3})}, CompanyRegistry{});
  ASSERT_EQ(segments.size(), 2u);
  EXPECT_EQ(segments[0], (DiscourseSegment{0, 1, {1, 2}, StructureLabel::kTypeI}));
  EXPECT_EQ(segments[1], (DiscourseSegment{2, 2, {1, 3}, StructureLabel::kTypeI}));
}

TEST(SegmentTest, RepeatedTieupDoesNotSplit) {
  auto segments = SegmentDiscourse(
      Sentences(3), {TieUp(0, {1, 2}), TieUp(2, {1, 2})}, CompanyRegistry{});
  ASSERT_EQ(segments.size(), 1u);
  EXPECT_EQ(segments[0].last_sent, 2);
}

TEST(SegmentTest, OnePartnerIsNotATieup) {
  auto segments = SegmentDiscourse(
      Sentences(2), {TieUp(0, {1, 2}), TieUp(1, {1})}, CompanyRegistry{});
  ASSERT_EQ(segments.size(), 1u);
}

TEST(SegmentTest, NoTieupGivesOneUnlabeledSegment) {
  auto segments = SegmentDiscourse(Sentences(4), {}, CompanyRegistry{});
  ASSERT_EQ(segments.size(), 1u);
  EXPECT_EQ(segments[0],
            (DiscourseSegment{0, 3, {}, StructureLabel::kUnlabeled}));
}

TEST(SegmentTest, ReappearingMainTieupIsTypeTwo) {
  auto segments = SegmentDiscourse(
      Sentences(3), {TieUp(0, {1, 2}), TieUp(1, {3, 4}), TieUp(2, {1, 2})},
      CompanyRegistry{});
  ASSERT_EQ(segments.size(), 3u);
  for (const auto &s : segments) EXPECT_EQ(s.structure, StructureLabel::kTypeII);
}

TEST(SegmentTest, RandomSegmentsAreOrderedDisjointAndCovering) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<ConceptInstance> instances;
    for (int s = 0; s < n; ++s) {
      if (rng() % 2) continue;
      IdSet ids = MakeIdSet({static_cast<int>(rng() % 4) + 1,
                             static_cast<int>(rng() % 4) + 1});
      instances.push_back(TieUp(s, ids));
    }
    auto segments = SegmentDiscourse(Sentences(n), instances, CompanyRegistry{});
    for (size_t k = 0; k < segments.size(); ++k) {
      EXPECT_LE(segments[k].first_sent, segments[k].last_sent);
      if (k > 0) EXPECT_EQ(segments[k].first_sent, segments[k - 1].last_sent + 1);
    }
    EXPECT_EQ(segments.back().last_sent, n - 1);
    for (const ConceptInstance &c : instances) {
      if (c.partner_ids.size() < 2) continue;
      bool covered = false;
      for (const auto &s : segments) covered = covered || s.Contains(c.sent_index);
      EXPECT_TRUE(covered);
    }
  }
}

TEST(MergeTest, AttachesBySharedSubject) {
  DiscourseSegment xy{0, 1, {1, 2}, StructureLabel::kTypeI};
  DiscourseSegment xz{2, 2, {1, 3}, StructureLabel::kTypeI};
  ConceptInstance sale = TieUp(1, {}, "ECONOMIC-ACTIVITY");
  sale.subject_ids = {1};
  ConceptInstance stray = TieUp(1, {}, "ESTABLISH");  // no subject
  TieUpCluster a = MergeConcepts(xy, {TieUp(0, {1, 2}), sale, stray});
  EXPECT_EQ(a.attached.size(), 2u);
  EXPECT_EQ(a.unattached.size(), 1u);
  TieUpCluster b = MergeConcepts(xz, {TieUp(0, {1, 2}), sale});
  EXPECT_TRUE(b.attached.empty());  // out of range
}

TEST(MergeTest, Monotone) {
  DiscourseSegment seg{0, 3, {1, 2}, StructureLabel::kTypeI};
  std::mt19937 rng(4);
  std::vector<ConceptInstance> concepts;
  size_t attached = 0;
  for (int k = 0; k < 50; ++k) {
    ConceptInstance c = TieUp(rng() % 5, {});
    c.subject_ids = MakeIdSet({static_cast<int>(rng() % 4)});
    concepts.push_back(c);
    TieUpCluster cluster = MergeConcepts(seg, concepts);
    EXPECT_GE(cluster.attached.size(), attached);
    attached = cluster.attached.size();
  }
}

}  // namespace
}  // namespace tieup

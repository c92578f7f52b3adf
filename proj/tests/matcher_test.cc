// Copyright 2026 The SkillKit Authors.
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

#include "skillkit/matcher.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "oracle/brute_force.h"
#include "skillkit/date.h"

namespace skillkit {
namespace {

const std::string kReferenceSentence =
    "Quentin Tarantino won the Palme d'Or in 1994 for Pulp Fiction.";

std::vector<std::string> Surfaces(std::string_view sentence,
                                  const std::vector<Span> &spans) {
  std::vector<std::string> out;
  for (const Span &s : spans) out.emplace_back(s.Surface(sentence));
  return out;
}

TEST(MatchEntityTest, ExactMatchIsMappedToOriginalBytes) {
  const auto spans = MatchEntity("Palme d'Or", kReferenceSentence);
  ASSERT_EQ(1u, spans.size());
  EXPECT_EQ((Span{26, 36}), spans[0]);
  EXPECT_EQ("Palme d'Or", spans[0].Surface(kReferenceSentence));
}

TEST(MatchEntityTest, TrailingPunctuationIsNotPartOfTheSpan) {
  EXPECT_EQ(std::vector<std::string>{"Pulp Fiction"},
            Surfaces(kReferenceSentence, MatchEntity("Pulp Fiction", kReferenceSentence)));
}

TEST(MatchEntityTest, BracketFallback) {
  const std::string s = "John Doe stars in the film.";
  EXPECT_EQ(std::vector<std::string>{"John Doe"},
            Surfaces(s, MatchEntity("John Doe (born 1990)", s)));
}

TEST(MatchEntityTest, FallbackOnlyWhenNothingElseMatched) {
  // The full name is present, so the stripped name must not add spans.
  const std::string s = "Paris (France) is not Paris in Texas.";
  EXPECT_EQ(std::vector<std::string>{"Paris (France"},
            Surfaces(s, MatchEntity("Paris (France)", s)));
}

TEST(MatchEntityTest, NoMatch) {
  EXPECT_TRUE(MatchEntity("Berlin", "I was in Paris.").empty());
  EXPECT_TRUE(MatchEntity("", "I was in Paris.").empty());
  EXPECT_TRUE(MatchEntity("...", "I was in Paris...").empty());
  EXPECT_TRUE(MatchEntity("art", "What a party.").empty());
  EXPECT_TRUE(MatchEntity("US", "thus it was").empty());
}

TEST(MatchEntityTest, DateBranch) {
  const std::string s = "It premiered on 23 May 1994 at Cannes.";
  EXPECT_EQ(std::vector<std::string>{"23 May 1994"},
            Surfaces(s, MatchEntity("1994-05-23", s)));
  const std::string t = "Released May 23, 1994 and again 1994-05-23.";
  EXPECT_EQ((std::vector<std::string>{"May 23, 1994", "1994-05-23"}),
            Surfaces(t, MatchEntity("23 May 1994", t)));
  EXPECT_TRUE(MatchEntity("1994-05-24", s).empty());
}

TEST(MatchEntityTest, BareYearMatchesMaximalDateWindow) {
  const std::string s = "Born 23 May 1994, died 2001.";
  EXPECT_EQ(std::vector<std::string>{"23 May 1994"},
            Surfaces(s, MatchEntity("1994", s)));
}

TEST(MatchEntityTest, AgreesWithBruteForceOnReferenceSentence) {
  for (const std::string e : {"Quentin Tarantino", "Palme d'Or", "Pulp Fiction",
                              "1994", "award received"}) {
    EXPECT_EQ(oracle::MatchEntity(e, kReferenceSentence),
              MatchEntity(e, kReferenceSentence))
        << e;
  }
}

TEST(MatchEntityTest, OverlapsResolveLeftmostLongest) {
  const std::string s = "new york new york city";
  const auto spans = MatchEntity("New York New York", s);
  ASSERT_EQ(1u, spans.size());
  EXPECT_EQ(0u, spans[0].start);
  EXPECT_EQ((std::vector<Span>{{0, 5}, {6, 9}}),
            ResolveOverlaps({{6, 9}, {0, 5}, {0, 3}, {2, 7}}));
}

TEST(StripTrailingParentheticalTest, Shapes) {
  EXPECT_EQ("John Doe", StripTrailingParenthetical("John Doe (born 1990)"));
  EXPECT_EQ("A (b)", StripTrailingParenthetical("A (b) (c)"));
  EXPECT_FALSE(StripTrailingParenthetical("A (b (c))"));
  EXPECT_FALSE(StripTrailingParenthetical("(born 1990)"));
  EXPECT_FALSE(StripTrailingParenthetical("Doe(1990)"));
  EXPECT_FALSE(StripTrailingParenthetical("John Doe"));
}

// Random corpus: the optimized matcher equals exhaustive enumeration, every
// span is valid, and the fallback never fires when the first two branches
// found something.
TEST(MatchEntityTest, PropertiesOnRandomSentences) {
  testing::SentenceGenerator gen(2024);
  for (int i = 0; i < 300; ++i) {
    const std::string sentence = gen.Next();
    const auto cands = oracle::Candidates(sentence);
    const PreparedSentence prepared(sentence);
    for (const std::string &entity : gen.Probes()) {
      const auto got = MatchEntity(entity, prepared);
      ASSERT_EQ(oracle::MatchEntity(entity, sentence, cands), got)
          << "entity: " << entity << "\nsentence: " << sentence;
      const auto date = ParseDate(entity);
      const auto stripped = StripTrailingParenthetical(entity);
      for (std::size_t k = 0; k < got.size(); ++k) {
        const Span &s = got[k];
        ASSERT_TRUE(IsValidSpan(sentence, s));
        if (k > 0) EXPECT_LE(got[k - 1].end, s.start);
        const std::string surface(s.Surface(sentence));
        const auto sdate = ParseDate(surface);
        const bool exact = PreprocessText(surface) == PreprocessText(entity);
        const bool dated = date && sdate && SameDate(*date, *sdate);
        const bool fallback =
            stripped && PreprocessText(surface) == PreprocessText(*stripped);
        EXPECT_TRUE(exact || dated || fallback) << surface << " for " << entity;
      }
      if (stripped) {
        // Fallback exclusivity: spans come from the fallback alone only when
        // the full name found nothing.
        std::vector<Span> primary;
        if (date) {
          for (const Span &s : got) {
            auto d = ParseDate(s.Surface(sentence));
            if (d && SameDate(*d, *date)) primary.push_back(s);
          }
        }
        const bool full_found = !FindTokenOccurrences(
            prepared.normalized().text, PreprocessText(entity)).empty();
        if (full_found || !primary.empty()) {
          for (const Span &s : got) {
            const std::string n = PreprocessText(s.Surface(sentence));
            if (n != PreprocessText(entity)) {
              auto d = ParseDate(s.Surface(sentence));
              EXPECT_TRUE(date && d && SameDate(*d, *date));
            }
          }
        }
      }
    }
  }
}

TEST(MatchRecordTest, ReferenceRecord) {
  const Triple t{"Pulp Fiction", "award received", "Palme d'Or"};
  const auto m = MatchRecord(kReferenceSentence, {t});
  ASSERT_TRUE(m.matched());
  ASSERT_EQ(2u, m.entity_spans.size());
  const auto &subj = m.entity_spans.at({0, Role::kSubject});
  const auto &obj = m.entity_spans.at({0, Role::kObject});
  EXPECT_EQ(std::vector<std::string>{"Pulp Fiction"}, Surfaces(m.sentence, subj));
  EXPECT_EQ(std::vector<std::string>{"Palme d'Or"}, Surfaces(m.sentence, obj));
}

TEST(MatchRecordTest, NoTriples) {
  const auto m = MatchRecord("Nothing aligned here.", {});
  EXPECT_FALSE(m.matched());
  EXPECT_TRUE(m.entity_spans.empty());
}

TEST(MatchRecordTest, OnlyObjectMatches) {
  const auto m = MatchRecord("Tarantino won the Palme d'Or in 1994.",
                             {{"Pulp Fiction", "award received", "Palme d'Or"}});
  EXPECT_TRUE(m.matched());
  ASSERT_EQ(1u, m.entity_spans.size());
  EXPECT_TRUE(m.entity_spans.contains({0, Role::kObject}));
}

TEST(MatchRecordTest, RelationsAreNeverMatched) {
  const auto m = MatchRecord("The award received praise.",
                             {{"Pulp Fiction", "award received", "Palme d'Or"}});
  EXPECT_FALSE(m.matched());
}

}  // namespace
}  // namespace skillkit

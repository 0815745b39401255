// Copyright 2026 The morphaug Authors.
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

#include <gtest/gtest.h>

#include "morphaug/error.h"
#include "morphaug/lexicon.h"
#include "morphaug/text.h"
#include "test_util.h"

namespace morphaug {
namespace {

using testing_util::TempDir;

FeatureBundle B(const char* tags) { return FeatureBundle::parse(tags); }

struct GuitarPair {
  ParadigmLexicon en, ku;
  GuitarPair() {
    en.add("guitar", "guitar", B("N;ACC;SG"));
    en.add("flower", "flower", B("N;ACC;SG"));
    ku.add("gîtar", "gîtarê", B("N;ACC;SG"));
    ku.add("gul", "gulê", B("N;ACC;SG"));
  }
};

TEST(Lexicon, FirstTranslationWins) {
  GuitarPair f;
  auto lex = BilingualLexicon::build({{"flower", "gul", "N"}, {"flower", "kulîlk", "N"}}, f.en, f.ku);
  ASSERT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.entries()[0].tgt_lemma, "gul");
  EXPECT_EQ(lex.load_stats().duplicate_source, 1u);
}

TEST(Lexicon, EmptyFileIsConfigError) {
  GuitarPair f;
  TempDir dir("lex");
  text::write_file(dir / "lex.tsv", "");
  EXPECT_THROW(load_lexicon(dir / "lex.tsv", f.en, f.ku), ConfigError);
}

TEST(Lexicon, PosMismatchDropped) {
  ParadigmLexicon en, ku;
  en.add("run", "run", B("V;NFIN"));
  en.add("dog", "dog", B("N;SG"));
  ku.add("kuçik", "kuçik", B("N;NOM;SG"));
  TempDir dir("lex");
  // Six rows: "run" is only a verb in the source paradigms, so tagging it N
  // contradicts them. Unknown words cannot contradict anything.
  text::write_lines(dir / "lex.tsv", {"dog\tkuçik\tN", "run\tbez\tN", "cat\tpisîk\tN",
                                      "big\tmezin\tADJ", "go\tçûn\tV", "red\tsor\tADJ"});
  auto lex = load_lexicon(dir / "lex.tsv", en, ku);
  EXPECT_EQ(lex.size(), 5u);
  EXPECT_EQ(lex.load_stats().pos_mismatch, 1u);
  EXPECT_EQ(lex.find("run"), nullptr);
}

TEST(Lexicon, MalformedRowsCounted) {
  ParadigmLexicon none;
  auto lex = BilingualLexicon::build({{"a", "b"}, {"two words", "x", "N"}, {"c", "d", "N"}}, none, none);
  EXPECT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.load_stats().malformed, 2u);
}

TEST(Lexicon, FlowerIsACandidate) {
  GuitarPair f;
  auto lex = BilingualLexicon::build({{"flower", "gul", "N"}, {"guitar", "gîtar", "N"}}, f.en, f.ku);
  for (auto match : {CandidateMatch::kExactBundle, CandidateMatch::kParadigm}) {
    auto c = lex.candidates(B("N;ACC;SG"), match, Restriction::kAll);
    ASSERT_FALSE(c.empty());
    EXPECT_EQ(lex.entries()[c[0]].src_lemma, "flower");
    EXPECT_EQ(lex.entries()[c[0]].tgt_lemma, "gul");
  }
}

TEST(Lexicon, VerbBundleOverNounsIsEmpty) {
  GuitarPair f;
  auto lex = BilingualLexicon::build({{"flower", "gul", "N"}}, f.en, f.ku);
  EXPECT_TRUE(lex.candidates(B("V;PST"), CandidateMatch::kParadigm, Restriction::kAll).empty());
  EXPECT_TRUE(lex.candidates(B("V;PST"), CandidateMatch::kPosOnly, Restriction::kAll).empty());
}

TEST(Lexicon, FirstHalfRestriction) {
  ParadigmLexicon en, ku;
  std::vector<std::vector<std::string>> rows;
  const std::vector<std::string> words = {"kiwi", "apple", "fig", "lime", "date",
                                          "pear", "plum", "grape", "melon", "banana"};
  for (const auto& w : words) {
    en.add(w, w, B("N;SG"));
    rows.push_back({w, "t_" + w, "N"});
  }
  auto lex = BilingualLexicon::build(rows, en, ku);
  auto c = lex.candidates(B("N;SG"), CandidateMatch::kExactBundle, Restriction::kFirstHalf);
  std::vector<std::string> got;
  for (auto i : c) got.push_back(lex.entries()[i].src_lemma);
  EXPECT_EQ(got, (std::vector<std::string>{"apple", "banana", "date", "fig", "grape"}));
}

TEST(Lexicon, ConsumeOnceSkipsConsumed) {
  GuitarPair f;
  auto lex = BilingualLexicon::build({{"flower", "gul", "N"}, {"guitar", "gîtar", "N"}}, f.en, f.ku);
  ConsumedSet used;
  used.consume(0);
  auto c = lex.candidates(B("N;ACC;SG"), CandidateMatch::kParadigm, Restriction::kConsumeOnce, &used);
  EXPECT_EQ(c, (std::vector<std::size_t>{1}));
}

TEST(Lexicon, ParadigmMatchSeesInflectedBundles) {
  ParadigmLexicon en, ku;
  en.add("dog", "dog", B("N;SG"));
  en.add("dog", "dogs", B("N;PL"));
  auto lex = BilingualLexicon::build({{"dog", "kuçik", "N"}}, en, ku);
  EXPECT_EQ(lex.entries()[0].src_bundle, B("N;SG"));
  EXPECT_EQ(lex.candidates(B("N;PL"), CandidateMatch::kParadigm, Restriction::kAll).size(), 1u);
  EXPECT_TRUE(lex.candidates(B("N;PL"), CandidateMatch::kExactBundle, Restriction::kAll).empty());
}

TEST(Lexicon, InflectedHeadwordUsesItsLemmaAsBase) {
  ParadigmLexicon en, ku;
  en.add("dog", "dog", B("N;SG"));
  en.add("dog", "dogs", B("N;PL"));
  auto lex = BilingualLexicon::build({{"dogs", "kuçikan", "N"}}, en, ku);
  EXPECT_EQ(lex.entries()[0].src_base, "dog");
  EXPECT_EQ(lex.same_lemma("dog"), (std::vector<std::size_t>{0}));
}

TEST(Lexicon, FourthColumnSetsBundle) {
  ParadigmLexicon en, ku;
  auto lex = BilingualLexicon::build({{"flower", "gul", "N", "ACC;SG"}}, en, ku);
  EXPECT_EQ(lex.entries()[0].src_bundle, B("N;ACC;SG"));
}

TEST(Lexicon, ParseNames) {
  EXPECT_EQ(parse_restriction("first-half"), Restriction::kFirstHalf);
  EXPECT_EQ(parse_candidate_match(to_string(CandidateMatch::kPosOnly)), CandidateMatch::kPosOnly);
  EXPECT_THROW(parse_restriction("most"), ConfigError);
}

}  // namespace
}  // namespace morphaug

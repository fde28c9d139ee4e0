// Copyright 2026 The cbst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cbst/noise.h"

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cbst/errors.h"
#include "support/test_util.h"

namespace cbst {
namespace {

using testing::Input;
using testing::T;

std::vector<Triple> Sorted(const StructuredInput& in) {
  std::vector<Triple> v = in.triples();
  std::sort(v.begin(), v.end());
  return v;
}

TEST(SubstituteWordsTest, BakewellExample) {
  SynonymLexicon lexicon({{"pudding", {"dessert"}}, {"served", {"acted"}}});
  StructuredInput in = Input({T("Bakewell pudding", "served", "Warm or cold")});
  NoiseRng rng = SampleRng(1, 0);
  StructuredInput out = SubstituteWords(in, lexicon, 1.0, rng);
  EXPECT_EQ(out, Input({T("Bakewell dessert", "acted", "Warm or cold")}));
}

TEST(SubstituteWordsTest, ZeroProbabilityOrEmptyLexiconIsIdentity) {
  StructuredInput in = Input({T("Bakewell pudding", "served", "Warm or cold")});
  NoiseRng rng = SampleRng(1, 0);
  EXPECT_EQ(SubstituteWords(in, SynonymLexicon::BuiltinDemo(), 0.0, rng), in);
  EXPECT_EQ(SubstituteWords(in, SynonymLexicon(), 1.0, rng), in);
}

TEST(SubstituteWordsTest, CaseInsensitiveLookupUsesFirstSynonym) {
  SynonymLexicon lexicon = SynonymLexicon::BuiltinDemo();
  ASSERT_NE(lexicon.Lookup("Served"), nullptr);
  EXPECT_EQ(*lexicon.Lookup("Served"), "acted");
  EXPECT_EQ(lexicon.Lookup("unknown"), nullptr);
}

TEST(ReorderTriplesTest, ShepardSwap) {
  StructuredInput in = Input({T("Alan Shepard", "status", "Deceased"),
                              T("Alan Shepard", "occupation", "Test pilot")});
  StructuredInput swapped = Input({T("Alan Shepard", "occupation", "Test pilot"),
                                   T("Alan Shepard", "status", "Deceased")});
  bool saw_swap = false, saw_identity = false;
  for (uint64_t index = 0; index < 64; ++index) {
    NoiseRng rng = SampleRng(17, index);
    StructuredInput out = ReorderTriples(in, 1.0, rng);
    if (out == swapped) saw_swap = true;
    else if (out == in) saw_identity = true;
    else ADD_FAILURE() << "not a permutation of two triples";
  }
  EXPECT_TRUE(saw_swap);
  EXPECT_TRUE(saw_identity);
}

TEST(ReorderTriplesTest, SingleTripleAndZeroProbability) {
  StructuredInput one = Input({T("a", "b", "c")});
  StructuredInput two = Input({T("a", "b", "c"), T("d", "e", "f")});
  for (uint64_t index = 0; index < 20; ++index) {
    NoiseRng rng = SampleRng(3, index);
    EXPECT_EQ(ReorderTriples(one, 1.0, rng), one);
    EXPECT_EQ(ReorderTriples(two, 0.0, rng), two);
  }
}

TEST(ApplyNoiseTest, InvariantsOnRandomInputs) {
  std::mt19937_64 rng(8);
  const SynonymLexicon lexicon = SynonymLexicon::BuiltinDemo();
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  for (uint64_t i = 0; i < 500; ++i) {
    StructuredInput in = testing::RandomInput(rng, 6);
    NoiseConfig cfg{prob(rng), prob(rng), rng()};

    NoiseRng r1 = SampleRng(cfg.seed, i);
    EXPECT_EQ(Sorted(ReorderTriples(in, cfg.p_triple, r1)), Sorted(in));

    NoiseRng r2 = SampleRng(cfg.seed, i);
    StructuredInput sub = SubstituteWords(in, lexicon, cfg.p_word, r2);
    ASSERT_EQ(sub.size(), in.size());
    for (size_t k = 0; k < in.size(); ++k) {
      const Triple& a = in.triples()[k];
      const Triple& b = sub.triples()[k];
      for (auto [x, y] : {std::pair{a.subject(), b.subject()},
                          std::pair{a.predicate(), b.predicate()},
                          std::pair{a.object(), b.object()}}) {
        std::vector<std::string> xs = SplitWhitespace(x), ys = SplitWhitespace(y);
        ASSERT_EQ(xs.size(), ys.size());
        for (size_t w = 0; w < xs.size(); ++w) {
          if (lexicon.Lookup(xs[w]) == nullptr) EXPECT_EQ(xs[w], ys[w]);
          else EXPECT_TRUE(xs[w] == ys[w] || *lexicon.Lookup(xs[w]) == ys[w]);
        }
      }
    }

    EXPECT_EQ(ApplyNoise(in, lexicon, cfg, i), ApplyNoise(in, lexicon, cfg, i));
    EXPECT_EQ(ApplyNoise(in, lexicon, NoiseConfig{0.0, 0.0, cfg.seed}, i), in);
  }
}

TEST(ApplyNoiseTest, SeedChangeKeepsCardinality) {
  StructuredInput in = Input({T("Bakewell pudding", "served", "Warm or cold"),
                              T("Alan Shepard", "status", "Deceased"),
                              T("Alan Shepard", "occupation", "Test pilot")});
  const SynonymLexicon lexicon = SynonymLexicon::BuiltinDemo();
  bool differed = false;
  for (uint64_t seed = 1; seed < 20; ++seed) {
    StructuredInput a = ApplyNoise(in, lexicon, NoiseConfig{0.5, 0.5, seed}, 0);
    StructuredInput b = ApplyNoise(in, lexicon, NoiseConfig{0.5, 0.5, seed + 100}, 0);
    EXPECT_EQ(a.size(), in.size());
    EXPECT_EQ(b.size(), in.size());
    differed = differed || !(a == b);
  }
  EXPECT_TRUE(differed);
}

TEST(NoiseConfigTest, Validate) {
  EXPECT_NO_THROW((NoiseConfig{0.0, 1.0, 0}.Validate()));
  EXPECT_THROW((NoiseConfig{-0.1, 0.0, 0}.Validate()), ConfigError);
  EXPECT_THROW((NoiseConfig{0.0, 1.5, 0}.Validate()), ConfigError);
}

TEST(SynonymLexiconTest, ParseAndWriteRoundTrip) {
  std::istringstream in("# comment\npudding\tdessert\n\nserved\tacted, offered\n");
  SynonymLexicon lexicon = SynonymLexicon::Parse(in, "lex.tsv");
  EXPECT_EQ(lexicon.entries().at("served"), (std::vector<std::string>{"acted", "offered"}));
  std::stringstream out;
  lexicon.Write(out);
  EXPECT_EQ(SynonymLexicon::Parse(out, "again").entries(), lexicon.entries());
}

TEST(SynonymLexiconTest, RejectsBadEntries) {
  for (const char* bad : {"pudding\n", "pudding\t\n", "pudding\tpudding\n",
                          "a\tb\na\tc\n", "two words\tx\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(SynonymLexicon::Parse(in, "lex"), DataError) << bad;
  }
}

}  // namespace
}  // namespace cbst

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


#include "cbst/synthetic.h"

#include <set>

#include <gtest/gtest.h>

#include "cbst/errors.h"

namespace cbst {
namespace {

TEST(SyntheticWorldTest, Shape) {
  SyntheticWorld world = BuildSyntheticWorld();
  EXPECT_EQ(world.labeled_predicates.size(), 15u);
  EXPECT_EQ(world.unlabeled_only_predicates.size(), 25u);
  EXPECT_EQ(world.verb_phrase.size(), 40u);
  EXPECT_EQ(world.labeled.examples.size(), 30u);
  EXPECT_EQ(world.unlabeled.inputs.size(), 2000u);
  EXPECT_EQ(world.test.examples.size(), 300u);

  std::set<std::string> labeled_preds;
  for (const auto& ex : world.labeled.examples) {
    for (const auto& t : ex.input.triples()) labeled_preds.insert(t.predicate());
    EXPECT_EQ(ex.text, GoldText(world, ex.input));
  }
  EXPECT_EQ(labeled_preds,
            std::set<std::string>(world.labeled_predicates.begin(), world.labeled_predicates.end()));

  std::set<size_t> sizes;
  std::set<std::string> unlabeled_preds;
  for (const auto& in : world.unlabeled.inputs) {
    sizes.insert(in.size());
    for (const auto& t : in.triples()) unlabeled_preds.insert(t.predicate());
    // Listed in (predicate, subject, object) order.
    for (size_t i = 1; i < in.size(); ++i) {
      const Triple& a = in.triples()[i - 1];
      const Triple& b = in.triples()[i];
      EXPECT_LE(std::tie(a.predicate(), a.subject(), a.object()),
                std::tie(b.predicate(), b.subject(), b.object()));
    }
  }
  EXPECT_EQ(*sizes.begin(), 1u);
  EXPECT_EQ(*sizes.rbegin(), 8u);
  for (const auto& p : world.unlabeled_only_predicates) EXPECT_TRUE(unlabeled_preds.count(p)) << p;
}

TEST(SyntheticWorldTest, UnlabeledGraphsOverlapTheLabeledSet) {
  SyntheticWorld world = BuildSyntheticWorld();
  EXPECT_EQ(FilterByEntityOverlap(world.unlabeled, world.labeled).inputs.size(),
            world.unlabeled.inputs.size());
}

TEST(SyntheticWorldTest, VariantsAreOneNoiseStepAway) {
  SyntheticWorld world = BuildSyntheticWorld();
  for (const std::string& variant : world.unlabeled_only_predicates) {
    std::vector<std::string> words = SplitWhitespace(variant);
    bool reachable = false;
    for (const std::string& base : world.labeled_predicates) {
      std::vector<std::string> b = SplitWhitespace(base);
      int swapped = 0;
      bool ok = b.size() == words.size();
      for (size_t i = 0; ok && i < b.size(); ++i) {
        if (b[i] == words[i]) continue;
        const std::string* syn = world.lexicon.Lookup(b[i]);
        ok = syn != nullptr && *syn == words[i];
        ++swapped;
      }
      if (ok && swapped == 1 && world.verb_phrase.at(base) == world.verb_phrase.at(variant)) {
        reachable = true;
      }
    }
    EXPECT_TRUE(reachable) << variant;
  }
}

TEST(SyntheticWorldTest, DeterministicPerSeed) {
  SyntheticWorldSpec spec;
  spec.unlabeled_graphs = 50;
  spec.test_pairs = 10;
  EXPECT_EQ(BuildSyntheticWorld(spec).unlabeled.inputs, BuildSyntheticWorld(spec).unlabeled.inputs);
  SyntheticWorldSpec other = spec;
  other.seed = 18;
  EXPECT_NE(BuildSyntheticWorld(spec).unlabeled.inputs, BuildSyntheticWorld(other).unlabeled.inputs);
}

TEST(SyntheticWorldTest, GoldTextAndErrors) {
  SyntheticWorld world = BuildSyntheticWorld();
  StructuredInput in({Triple("Ann Lee", "birth place", "Oslo Town"),
                      Triple("Bo Ek", "natal place", "Rome")});
  EXPECT_EQ(GoldText(world, in).ToText(),
            "Ann Lee was born in Oslo Town . Bo Ek was born in Rome .");
  EXPECT_THROW(GoldText(world, StructuredInput({Triple("a", "nope", "b")})), DataError);
  SyntheticWorldSpec bad;
  bad.labeled_predicates = 16;
  EXPECT_THROW(BuildSyntheticWorld(bad), ConfigError);
}

}  // namespace
}  // namespace cbst

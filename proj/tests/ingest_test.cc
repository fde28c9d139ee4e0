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


#include "cbst/ingest.h"

#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "cbst/errors.h"
#include "support/test_util.h"

namespace cbst {
namespace {

using testing::Input;
using testing::T;
using testing::Text;

LabeledDataset LabeledFrom(const std::string& body) {
  std::istringstream in(body);
  return ParseLabeled(in, "train.jsonl");
}

UnlabeledDataset UnlabeledFrom(const std::string& body) {
  std::istringstream in(body);
  return ParseUnlabeled(in, "pool.jsonl");
}

std::string ErrorOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseLabeledTest, OneRecord) {
  LabeledDataset data = LabeledFrom(
      R"({"triples": [["Alan Shepard","status","Deceased"]], "text": "Alan Shepard is deceased ."})"
      "\n");
  ASSERT_EQ(data.examples.size(), 1u);
  EXPECT_EQ(data.examples[0].input.size(), 1u);
  EXPECT_EQ(data.examples[0].text.size(), 5u);
}

TEST(ParseLabeledTest, EmptyFileAndBlankLines) {
  EXPECT_TRUE(LabeledFrom("").examples.empty());
  EXPECT_TRUE(LabeledFrom("\n   \n").examples.empty());
}

TEST(ParseLabeledTest, ErrorsNameTheLine) {
  const std::string body =
      R"({"triples": [["a","b","c"]], "text": "a b c"})"
      "\n\n"
      R"({"triples": [], "text": "x"})"
      "\n";
  EXPECT_EQ(ErrorOf([&] { LabeledFrom(body); }).rfind("train.jsonl:3:", 0), 0u);
}

TEST(ParseLabeledTest, RejectsBadRecords) {
  for (const char* bad :
       {R"({"triples": [["a","b","c"]]})", R"({"triples": [["a","b","c"]], "text": "  "})",
        R"({"triples": [["a","b"]], "text": "x"})", R"({"triples": "a", "text": "x"})",
        R"([1, 2])", R"({"triples": [["a","b","c"]], "text": 3})", "{not json"}) {
    EXPECT_THROW(LabeledFrom(std::string(bad) + "\n"), DataError) << bad;
  }
}

TEST(ParseUnlabeledTest, Records) {
  UnlabeledDataset data = UnlabeledFrom(
      R"({"triples": [["a","b","c"]]})"
      "\n"
      R"({"triples": [["a","b","c"],["d","e","f"]]})"
      "\n"
      R"({"triples": [["x","y","z"]]})"
      "\n");
  ASSERT_EQ(data.inputs.size(), 3u);
  EXPECT_EQ(data.inputs[1].size(), 2u);
}

TEST(ParseUnlabeledTest, RejectsText) {
  std::string msg = ErrorOf([] {
    UnlabeledFrom(R"({"triples": [["a","b","c"]], "text": "a"})"
                  "\n");
  });
  EXPECT_NE(msg.find("unexpected text field"), std::string::npos) << msg;
}

TEST(IngestRoundTripTest, WriteThenParse) {
  std::mt19937_64 rng(3);
  LabeledDataset labeled{"l", {}};
  UnlabeledDataset pool{"u", {}};
  std::vector<PseudoLabeledExample> pseudo;
  for (int i = 0; i < 50; ++i) {
    StructuredInput in = testing::RandomInput(rng, 4);
    labeled.examples.push_back(MakeLabeledExample(in, Text("text \"quoted\" " + std::to_string(i))));
    pool.inputs.push_back(in);
    pseudo.push_back({in, Text("t " + std::to_string(i)), -0.1 * i, 0.5, 1 + i % 3});
  }
  std::stringstream a, b, c;
  WriteLabeled(a, labeled);
  WriteUnlabeled(b, pool);
  WritePseudoLabeled(c, pseudo);
  EXPECT_EQ(ParseLabeled(a, "l").examples, labeled.examples);
  EXPECT_EQ(ParseUnlabeled(b, "u").inputs, pool.inputs);
  EXPECT_EQ(ParsePseudoLabeled(c, "p"), pseudo);
}

TEST(ParsePseudoLabeledTest, RejectsOutOfRangeFields) {
  for (const char* bad :
       {R"({"triples": [["a","b","c"]], "text": "a", "logprob": 0, "coverage": 1.5, "iteration": 1})",
        R"({"triples": [["a","b","c"]], "text": "a", "logprob": 0, "coverage": 1, "iteration": 0})",
        R"({"triples": [["a","b","c"]], "text": "a", "coverage": 1, "iteration": 1})"}) {
    std::istringstream in(std::string(bad) + "\n");
    EXPECT_THROW(ParsePseudoLabeled(in, "p"), DataError) << bad;
  }
}

TEST(FilterTest, KeepsOverlapDropsDisjoint) {
  LabeledDataset labeled{"l", {MakeLabeledExample(Input({T("Alan Shepard", "status", "Deceased")}),
                                                  Text("Alan Shepard is dead ."))}};
  UnlabeledDataset pool{"u",
                        {Input({T("alan  shepard", "occupation", "Test pilot")}),
                         Input({T("zzz", "p", "zzz")})}};
  UnlabeledDataset kept = FilterByEntityOverlap(pool, labeled);
  ASSERT_EQ(kept.inputs.size(), 1u);
  EXPECT_EQ(kept.inputs[0], pool.inputs[0]);
}

TEST(FilterTest, EmptyLabeledIsAnError) {
  EXPECT_THROW(FilterByEntityOverlap(UnlabeledDataset{}, LabeledDataset{}), DataError);
}

TEST(FilterTest, PropertiesOnRandomPools) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 50; ++round) {
    LabeledDataset labeled{"l", {}};
    for (int i = 0; i < 3; ++i) {
      labeled.examples.push_back(MakeLabeledExample(testing::RandomSmallGraph(rng, 2), Text("x")));
    }
    UnlabeledDataset pool{"u", {}};
    for (int i = 0; i < 40; ++i) pool.inputs.push_back(testing::RandomSmallGraph(rng, 3));

    UnlabeledDataset once = FilterByEntityOverlap(pool, labeled);
    EXPECT_LE(once.inputs.size(), pool.inputs.size());
    EXPECT_EQ(FilterByEntityOverlap(once, labeled).inputs, once.inputs);

    // Independent vocabulary and per-input check.
    std::set<std::string> vocab;
    for (const LabeledExample& ex : labeled.examples) {
      for (const Triple& t : ex.input.triples()) {
        vocab.insert(ToLowerAscii(t.subject()));
        vocab.insert(ToLowerAscii(t.object()));
      }
    }
    std::vector<StructuredInput> expected;
    for (const StructuredInput& in : pool.inputs) {
      bool hit = false;
      for (const Triple& t : in.triples()) {
        hit = hit || vocab.count(ToLowerAscii(t.subject())) || vocab.count(ToLowerAscii(t.object()));
      }
      if (hit) expected.push_back(in);
    }
    EXPECT_EQ(once.inputs, expected);
  }
}

TEST(FilterTest, SelfOverlapKeepsAll) {
  std::mt19937_64 rng(4);
  LabeledDataset labeled{"l", {}};
  UnlabeledDataset pool{"u", {}};
  for (int i = 0; i < 20; ++i) {
    StructuredInput in = testing::RandomInput(rng, 3);
    labeled.examples.push_back(MakeLabeledExample(in, Text("x")));
    pool.inputs.push_back(in);
  }
  EXPECT_EQ(FilterByEntityOverlap(pool, labeled).inputs.size(), 20u);
}

}  // namespace
}  // namespace cbst

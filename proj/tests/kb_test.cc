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


#include "cbst/kb.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "cbst/errors.h"
#include "support/test_util.h"

namespace cbst {
namespace {

using testing::Input;
using testing::T;

StructuredInput Shepard() {
  return Input({T("Alan Shepard", "status", "Deceased"),
                T("Alan Shepard", "occupation", "Test pilot")});
}

TEST(LinearizeTest, SingleTriple) {
  EXPECT_EQ(Linearize(Input({T("Alan Shepard", "status", "Deceased")})).ToText(),
            "<S> Alan Shepard <P> status <O> Deceased");
}

TEST(LinearizeTest, TwoTriplesInOrder) {
  EXPECT_EQ(Linearize(Shepard()).ToText(),
            "<S> Alan Shepard <P> status <O> Deceased "
            "<S> Alan Shepard <P> occupation <O> Test pilot");
}

TEST(LinearizeTest, Deterministic) {
  StructuredInput in = Input({T("a", "b", "c")});
  EXPECT_EQ(Linearize(in), Linearize(in));
}

TEST(LinearizeTest, RoundTripAndLengthOnRandomInputs) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    StructuredInput in = testing::RandomInput(rng, 6);
    TokenSeq seq = Linearize(in);
    EXPECT_EQ(ParseLinearized(seq), in);
    size_t expected = 0;
    for (const Triple& t : in.triples()) {
      expected += 3 + SplitWhitespace(t.subject()).size() +
                  SplitWhitespace(t.predicate()).size() +
                  SplitWhitespace(t.object()).size();
    }
    EXPECT_EQ(seq.size(), expected);
  }
}

TEST(ParseLinearizedTest, RejectsMalformed) {
  for (const char* bad : {"", "<S> a <P> b", "<S> a <O> c <P> b", "a <S> b <P> c <O> d",
                          "<S> <P> b <O> c", "<S> a <P> b <O>"}) {
    EXPECT_THROW(ParseLinearized(TokenSeq::FromText(bad)), DataError) << bad;
  }
}

TEST(ExtractEntitiesTest, SubjectsAndObjectsLowercased) {
  EXPECT_EQ(ExtractEntities(Shepard()),
            (std::set<std::string>{"alan shepard", "deceased", "test pilot"}));
  EXPECT_EQ(ExtractEntities(Input({T("x", "p", "x")})), (std::set<std::string>{"x"}));
  EXPECT_EQ(ExtractEntities(Input({T("A", "p", "B")})),
            (std::set<std::string>{"a", "b"}));
}

TEST(ExtractEntitiesTest, InvariantUnderReordering) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    StructuredInput in = testing::RandomInput(rng, 5);
    std::vector<Triple> shuffled = in.triples();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(ExtractEntities(in), ExtractEntities(StructuredInput(shuffled)));
  }
}

TEST(TripleTest, NormalizesWhitespace) {
  Triple t("  Alan   Shepard ", "status", "Deceased\t");
  EXPECT_EQ(t.subject(), "Alan Shepard");
  EXPECT_EQ(t.object(), "Deceased");
}

TEST(TripleTest, RejectsEmptyAndMarkerFields) {
  EXPECT_THROW(Triple("", "p", "o"), DataError);
  EXPECT_THROW(Triple("s", "  ", "o"), DataError);
  EXPECT_THROW(Triple("s", "p <O> q", "o"), DataError);
  EXPECT_THROW(Triple("a<S>b", "p", "o"), DataError);
}

TEST(StructuredInputTest, RejectsEmpty) {
  EXPECT_THROW(StructuredInput({}), DataError);
}

TEST(TokenSeqTest, RejectsBadTokens) {
  EXPECT_THROW(TokenSeq({"a b"}), DataError);
  EXPECT_THROW(TokenSeq({""}), DataError);
  EXPECT_EQ(TokenSeq::FromText("  a\tb \n c ").tokens(),
            (std::vector<std::string>{"a", "b", "c"}));
}

TEST(LabeledExampleTest, RejectsEmptyText) {
  EXPECT_THROW(MakeLabeledExample(Input({T("a", "b", "c")}), TokenSeq()), DataError);
}

TEST(TableToInputTest, RowEntityBecomesSubject) {
  StructuredInput in = TableToInput("Ada Lovelace", {{"born", "London"}, {"field", "mathematics"}});
  EXPECT_EQ(in.source_kind(), SourceKind::kTable);
  ASSERT_EQ(in.size(), 2u);
  EXPECT_EQ(in.triples()[1], T("Ada Lovelace", "field", "mathematics"));
  EXPECT_THROW(TableToInput("x", {}), DataError);
}

}  // namespace
}  // namespace cbst

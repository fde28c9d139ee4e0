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


#include "cbst/selection.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cbst/errors.h"
#include "support/test_util.h"

namespace cbst {
namespace {

using testing::Input;
using testing::T;
using testing::Text;

StructuredInput Shepard() {
  return Input({T("Alan Shepard", "status", "Deceased"),
                T("Alan Shepard", "occupation", "Test pilot")});
}

PseudoLabeledExample Candidate(int id, double coverage, double logprob) {
  return {Input({T("s" + std::to_string(id), "p", "o")}), Text("t " + std::to_string(id)),
          logprob, coverage, 1};
}

TEST(CoverageTest, HandExamples) {
  EXPECT_DOUBLE_EQ(Coverage(Shepard(), Text("Alan Shepard was a test pilot and is deceased .")), 1.0);
  EXPECT_DOUBLE_EQ(Coverage(Shepard(), Text("Alan Shepard was a test pilot .")), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(Coverage(Shepard(), Text("nothing here")), 0.0);
}

TEST(CoverageTest, MatchesWholeTokenRuns) {
  StructuredInput in = Input({T("Ann", "p", "Test pilot")});
  EXPECT_DOUBLE_EQ(Coverage(in, Text("Annie was a test pilots")), 0.0);
  EXPECT_DOUBLE_EQ(Coverage(in, Text("ANN was a TEST PILOT")), 1.0);
}

TEST(SelectTest, HandExample) {
  std::vector<PseudoLabeledExample> c = {Candidate(1, 1.0, -1.0), Candidate(2, 1.0, -3.0),
                                         Candidate(3, 0.5, -0.5), Candidate(4, 1.0, -2.0)};
  std::vector<PseudoLabeledExample> out = Select(c, SelectionConfig{1.0, 0.5});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], c[0]);
  EXPECT_EQ(out[1], c[3]);
}

TEST(SelectTest, NoOpThresholdsSortByLogprob) {
  std::vector<PseudoLabeledExample> c = {Candidate(1, 0.0, -2.0), Candidate(2, 0.3, -1.0),
                                         Candidate(3, 1.0, -3.0)};
  std::vector<PseudoLabeledExample> out = Select(c, SelectionConfig{0.0, 1.0});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], c[1]);
  EXPECT_EQ(out[1], c[0]);
  EXPECT_EQ(out[2], c[2]);
}

TEST(SelectTest, NoSurvivors) {
  std::vector<PseudoLabeledExample> c = {Candidate(1, 0.2, -1.0), Candidate(2, 0.9, -1.0)};
  EXPECT_TRUE(Select(c, SelectionConfig{1.0, 0.5}).empty());
}

TEST(SelectTest, TiesKeepInputOrder) {
  std::vector<PseudoLabeledExample> c = {Candidate(1, 1.0, -1.0), Candidate(2, 1.0, -1.0),
                                         Candidate(3, 1.0, -1.0)};
  std::vector<PseudoLabeledExample> out = Select(c, SelectionConfig{1.0, 0.5});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], c[0]);
  EXPECT_EQ(out[1], c[1]);
}

TEST(SelectTest, LengthNormalizedRanking) {
  PseudoLabeledExample long_text = Candidate(1, 1.0, -4.0);
  long_text.text = Text("a b c d e f g h");  // -0.5 per token
  PseudoLabeledExample short_text = Candidate(2, 1.0, -2.0);
  short_text.text = Text("a b");  // -1.0 per token
  std::vector<PseudoLabeledExample> c = {short_text, long_text};
  EXPECT_EQ(Select(c, SelectionConfig{1.0, 0.5, false}).front(), short_text);
  EXPECT_EQ(Select(c, SelectionConfig{1.0, 0.5, true}).front(), long_text);
}

// With a fractional quota, a stricter coverage threshold can let a
// lower-ranked survivor in: the quota is taken over fewer survivors, but the
// excluded candidate was ranked above it.
TEST(SelectTest, RaisingCoverageThresholdCanAdmitANewExample) {
  std::vector<PseudoLabeledExample> c = {Candidate(1, 0.5, -1.0), Candidate(2, 1.0, -2.0),
                                         Candidate(3, 1.0, -3.0), Candidate(4, 1.0, -4.0)};
  std::vector<PseudoLabeledExample> loose = Select(c, SelectionConfig{0.5, 0.5});
  std::vector<PseudoLabeledExample> strict = Select(c, SelectionConfig{1.0, 0.5});
  EXPECT_EQ(loose, (std::vector<PseudoLabeledExample>{c[0], c[1]}));
  EXPECT_EQ(strict, (std::vector<PseudoLabeledExample>{c[1], c[2]}));
}

TEST(QuotaCeilTest, Values) {
  EXPECT_EQ(QuotaCeil(0.5, 3), 2u);
  EXPECT_EQ(QuotaCeil(0.1, 30), 3u);
  EXPECT_EQ(QuotaCeil(1.0, 7), 7u);
  EXPECT_EQ(QuotaCeil(0.5, 0), 0u);
  EXPECT_EQ(QuotaCeil(0.01, 1), 1u);
}

TEST(SelectionConfigTest, Validate) {
  EXPECT_NO_THROW((SelectionConfig{0.0, 1.0}.Validate()));
  EXPECT_THROW((SelectionConfig{1.5, 0.5}.Validate()), ConfigError);
  EXPECT_THROW((SelectionConfig{1.0, 0.0}.Validate()), ConfigError);
  EXPECT_THROW((SelectionConfig{1.0, 1.1}.Validate()), ConfigError);
}

TEST(SelectTest, PropertiesOnRandomSets) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<double> levels = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<int> size(0, 40);
    std::vector<PseudoLabeledExample> c;
    for (int i = size(rng); i > 0; --i) {
      c.push_back(Candidate(static_cast<int>(c.size()), levels[rng() % levels.size()],
                            -10.0 * unit(rng)));
    }
    SelectionConfig cfg{levels[rng() % levels.size()], 0.05 + 0.95 * unit(rng)};
    std::vector<PseudoLabeledExample> out = Select(c, cfg);
    size_t survivors = std::count_if(c.begin(), c.end(), [&](const auto& x) {
      return x.coverage >= cfg.eps_cov;
    });
    const size_t quota =
        survivors == 0 ? 0 : static_cast<size_t>(std::ceil(cfg.eps_gen * survivors - 1e-9));
    EXPECT_EQ(out.size(), quota);
    for (const auto& x : out) EXPECT_GE(x.coverage, cfg.eps_cov);

    // Stable under permutation when scores are distinct.
    std::vector<PseudoLabeledExample> shuffled = c;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(Select(shuffled, cfg), out);

    // Lowering eps_gen never adds an example.
    for (const auto& x : Select(c, SelectionConfig{cfg.eps_cov, cfg.eps_gen * 0.5})) {
      EXPECT_NE(std::find(out.begin(), out.end(), x), out.end());
    }
    // Raising eps_cov shrinks the survivor set: with eps_gen = 1 the output
    // is exactly the survivors.
    SelectionConfig all{cfg.eps_cov, 1.0};
    std::vector<PseudoLabeledExample> loose = Select(c, all);
    all.eps_cov = std::min(1.0, cfg.eps_cov + 0.25);
    for (const auto& x : Select(c, all)) {
      EXPECT_NE(std::find(loose.begin(), loose.end(), x), loose.end());
    }
  }
}

}  // namespace
}  // namespace cbst

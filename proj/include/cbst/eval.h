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

#ifndef CBST_EVAL_H_
#define CBST_EVAL_H_

#include <cstddef>
#include <string>
#include <vector>

#include "cbst/generator.h"
#include "cbst/ingest.h"
#include "cbst/kb.h"

namespace cbst {

// Numerator used in place of a zero n-gram match count.
inline constexpr double kBleuEpsilon = 1e-9;

struct EvalReport {
  double bleu4 = 0.0;
  double mean_coverage = 0.0;
  size_t n_examples = 0;

  bool operator==(const EvalReport&) const = default;
};

// Corpus BLEU-4 with one reference per hypothesis, lowercased tokens,
// uniform weights and brevity penalty min(1, exp(1 - r/c)). A zero match
// count for order n contributes kBleuEpsilon / max(total_n, 1).
// Throws DataError on a length mismatch or an empty corpus.
double Bleu4(const std::vector<TokenSeq>& hypotheses,
             const std::vector<TokenSeq>& references);

// Generates for every test input and scores against the references.
// Throws DataError when `testset` is empty.
EvalReport Evaluate(const Generator& model, const LabeledDataset& testset,
                    int jobs = 1);

// "key=value" lines, prefixed with `prefix`.
std::string FormatEvalReport(const EvalReport& report,
                             const std::string& prefix = "");

}  // namespace cbst

#endif  // CBST_EVAL_H_

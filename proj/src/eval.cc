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

#include "cbst/eval.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "cbst/errors.h"
#include "cbst/format.h"
#include "cbst/parallel.h"
#include "cbst/selection.h"

namespace cbst {
namespace {

constexpr int kMaxOrder = 4;

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts CountNgrams(const std::vector<std::string>& tokens, int n) {
  NgramCounts counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

std::vector<std::string> Lowered(const TokenSeq& seq) {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (const std::string& token : seq.tokens()) out.push_back(ToLowerAscii(token));
  return out;
}

}  // namespace

double Bleu4(const std::vector<TokenSeq>& hypotheses,
             const std::vector<TokenSeq>& references) {
  if (hypotheses.size() != references.size()) {
    throw DataError("bleu4: " + std::to_string(hypotheses.size()) +
                    " hypotheses vs " + std::to_string(references.size()) +
                    " references");
  }
  if (hypotheses.empty()) throw DataError("bleu4: empty corpus");

  std::array<double, kMaxOrder> matches{};
  std::array<double, kMaxOrder> totals{};
  double hyp_len = 0.0;
  double ref_len = 0.0;
  for (size_t s = 0; s < hypotheses.size(); ++s) {
    const std::vector<std::string> hyp = Lowered(hypotheses[s]);
    const std::vector<std::string> ref = Lowered(references[s]);
    hyp_len += static_cast<double>(hyp.size());
    ref_len += static_cast<double>(ref.size());
    for (int n = 1; n <= kMaxOrder; ++n) {
      NgramCounts ref_counts = CountNgrams(ref, n);
      for (const auto& [gram, count] : CountNgrams(hyp, n)) {
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) matches[n - 1] += std::min(count, it->second);
        totals[n - 1] += count;
      }
    }
  }

  double log_sum = 0.0;
  for (int n = 0; n < kMaxOrder; ++n) {
    const double numerator = matches[n] > 0 ? matches[n] : kBleuEpsilon;
    log_sum += std::log(numerator / std::max(totals[n], 1.0));
  }
  const double brevity =
      hyp_len == 0.0 ? 0.0 : std::min(1.0, std::exp(1.0 - ref_len / hyp_len));
  return brevity * std::exp(log_sum / kMaxOrder);
}

EvalReport Evaluate(const Generator& model, const LabeledDataset& testset,
                    int jobs) {
  const size_t n = testset.examples.size();
  if (n == 0) throw DataError("cannot evaluate on an empty test set");
  std::vector<TokenSeq> hypotheses(n);
  std::vector<TokenSeq> references(n);
  std::vector<double> coverage(n);
  ParallelFor(n, jobs, [&](size_t i) {
    const LabeledExample& ex = testset.examples[i];
    hypotheses[i] = model.Generate(ex.input).text;
    references[i] = ex.text;
    coverage[i] = Coverage(ex.input, hypotheses[i]);
  });
  EvalReport report;
  report.bleu4 = Bleu4(hypotheses, references);
  double sum = 0.0;
  for (double c : coverage) sum += c;
  report.mean_coverage = sum / static_cast<double>(n);
  report.n_examples = n;
  return report;
}

std::string FormatEvalReport(const EvalReport& report,
                             const std::string& prefix) {
  return prefix + "bleu4=" + FormatDouble(report.bleu4) + "\n" + prefix +
         "mean_coverage=" + FormatDouble(report.mean_coverage) + "\n" + prefix +
         "n_examples=" + std::to_string(report.n_examples) + "\n";
}

}  // namespace cbst

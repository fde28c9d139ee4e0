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

// Mode-vs-mode comparison: every configuration is run on the same data and
// evaluated after teacher initialization (iteration 0) and after each
// self-training iteration.

#ifndef CBST_COMPARE_H_
#define CBST_COMPARE_H_

#include <iosfwd>
#include <vector>

#include "cbst/config.h"
#include "cbst/eval.h"
#include "cbst/pipeline.h"

namespace cbst {

struct ComparisonRow {
  PipelineMode mode;
  int iteration;
  EvalReport eval;
  size_t m_prime;  // 0 at iteration 0
};

// `configs` must differ only in `mode` (ConfigError otherwise) and
// `inputs.test` must be set (DataError otherwise). When `output_dir` is set,
// each mode persists its run under output_dir/<mode>.
std::vector<ComparisonRow> CompareModes(const std::vector<PipelineConfig>& configs,
                                        const PipelineInputs& inputs,
                                        const RunOptions& options = {});

// The four standard modes built from one configuration.
std::vector<PipelineConfig> StandardModes(const PipelineConfig& cfg);

// Tab-separated: mode, iteration, bleu4, mean_coverage, m_prime, with a
// header line.
void WriteComparisonTable(std::ostream& out,
                          const std::vector<ComparisonRow>& rows);

}  // namespace cbst

#endif  // CBST_COMPARE_H_

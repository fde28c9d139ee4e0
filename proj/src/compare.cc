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

#include "cbst/compare.h"

#include <ostream>

#include "cbst/errors.h"
#include "cbst/format.h"

namespace cbst {

std::vector<ComparisonRow> CompareModes(const std::vector<PipelineConfig>& configs,
                                        const PipelineInputs& inputs,
                                        const RunOptions& options) {
  if (!inputs.test) throw DataError("mode comparison needs a test set");
  for (const PipelineConfig& cfg : configs) {
    PipelineConfig a = cfg;
    PipelineConfig b = configs.front();
    a.mode = b.mode;
    if (a.ToText() != b.ToText()) {
      throw ConfigError("compared configurations must differ only in mode");
    }
  }
  std::vector<ComparisonRow> rows;
  for (const PipelineConfig& cfg : configs) {
    RunOptions run_options = options;
    if (!options.output_dir.empty()) {
      run_options.output_dir = options.output_dir / std::string(ModeName(cfg.mode));
    }
    RunResult result = Run(cfg, inputs, run_options);
    rows.push_back({cfg.mode, 0, *result.initial_eval, 0});
    for (const IterationReport& report : result.reports) {
      rows.push_back({cfg.mode, report.iteration, *report.eval, report.selected});
    }
  }
  return rows;
}

std::vector<PipelineConfig> StandardModes(const PipelineConfig& cfg) {
  std::vector<PipelineConfig> out;
  for (PipelineMode mode : {PipelineMode::kFinetuneOnly, PipelineMode::kStVanilla,
                            PipelineMode::kStNoise, PipelineMode::kCbst}) {
    PipelineConfig c = cfg;
    c.mode = mode;
    out.push_back(std::move(c));
  }
  return out;
}

void WriteComparisonTable(std::ostream& out,
                          const std::vector<ComparisonRow>& rows) {
  out << "mode\titeration\tbleu4\tmean_coverage\tm_prime\n";
  for (const ComparisonRow& row : rows) {
    out << ModeName(row.mode) << '\t' << row.iteration << '\t'
        << FormatDouble(row.eval.bleu4) << '\t'
        << FormatDouble(row.eval.mean_coverage) << '\t' << row.m_prime << '\n';
  }
}

}  // namespace cbst

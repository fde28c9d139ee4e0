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

// The curriculum-based self-training loop.
//
//   split the unlabeled pool into M_C curricula
//   teacher <- base fitted on the labeled set
//   for t = 1..M_C:
//     pool_t   <- curricula 1..t
//     cands    <- teacher generations for every input of pool_t
//     pseudo   <- coverage / probability selection over cands
//     student  <- base fitted on noisy pseudo pairs, then on the labeled set
//     teacher  <- student
//   return the last student
//
// Students always restart from the base model; knowledge flows between
// iterations only through the pseudo-labels.

#ifndef CBST_PIPELINE_H_
#define CBST_PIPELINE_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cbst/config.h"
#include "cbst/curriculum.h"
#include "cbst/eval.h"
#include "cbst/generator.h"
#include "cbst/ingest.h"
#include "cbst/noise.h"
#include "cbst/selection.h"

namespace cbst {

struct PipelineInputs {
  LabeledDataset labeled;
  UnlabeledDataset unlabeled;
  SynonymLexicon lexicon;
  std::optional<LabeledDataset> test;
};

// Reads every file named in cfg.data. Throws DataError before any training
// if a file is missing or malformed.
PipelineInputs LoadInputs(const PipelineConfig& cfg);

struct IterationReport {
  int iteration = 0;
  size_t pool_size = 0;   // |D_U'|
  size_t candidates = 0;  // generated texts
  size_t selected = 0;    // M'
  double mean_coverage = 0.0;  // over candidates
  double mean_logprob = 0.0;   // over candidates
  std::optional<EvalReport> eval;  // student on the test set, if any

  std::string ToText() const;
};

struct RunOptions {
  // Empty: keep everything in memory.
  std::filesystem::path output_dir;
  bool overwrite = false;
  int jobs = 0;  // 0: hardware concurrency
};

struct RunResult {
  std::unique_ptr<Generator> final_model;
  std::optional<EvalReport> initial_eval;  // teacher after initialization
  std::vector<IterationReport> reports;
};

// Empty template model configured from `cfg`.
std::unique_ptr<Generator> MakeBaseModel(const GeneratorConfig& cfg);

// The plan the given mode actually runs: a single curriculum for the
// ablation modes, the configured or automatic boundaries otherwise.
CurriculumPlan EffectivePlan(const PipelineConfig& cfg,
                             const UnlabeledDataset& pool);

// Noise used by the student at iteration t; zero probabilities for
// st_vanilla, and a seed derived from (cfg.seed, t).
NoiseConfig EffectiveNoise(const PipelineConfig& cfg, int iteration);

// Fits a copy of `base` on the labeled set without noise.
std::unique_ptr<Generator> InitTeacher(const Generator& base,
                                       const LabeledDataset& labeled,
                                       int epochs);

// Teacher generations for every input, in input order, with coverage.
std::vector<PseudoLabeledExample> GenerateCandidates(
    const Generator& teacher, const UnlabeledDataset& pool, int iteration,
    int jobs);

// Separate training: a fresh copy of `base` is fitted on the noisy pseudo
// pairs, then on the clean labeled pairs.
std::unique_ptr<Generator> TrainStudent(
    const Generator& base, const std::vector<PseudoLabeledExample>& pseudo,
    const LabeledDataset& labeled, const SynonymLexicon& lexicon,
    const NoiseConfig& noise, int epochs);

RunResult Run(const PipelineConfig& cfg, const PipelineInputs& inputs,
              const RunOptions& options = {});
RunResult Run(const PipelineConfig& cfg, const RunOptions& options = {});

// Creates `dir`, refusing a non-empty one unless `overwrite`, in which case
// its contents are removed first.
void PrepareOutputDir(const std::filesystem::path& dir, bool overwrite);

void WriteFile(const std::filesystem::path& path, const std::string& bytes);
std::string ReadFile(const std::filesystem::path& path);

}  // namespace cbst

#endif  // CBST_PIPELINE_H_

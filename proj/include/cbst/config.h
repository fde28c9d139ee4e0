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

// Run configuration as a flat key-value document:
//
//   # comment
//   mode = cbst
//   curriculum.boundaries = 2,4
//
// Unknown and duplicate keys are errors. ToText() renders every key with its
// resolved value in a canonical form, so a file edit and the equivalent
// key=value override produce byte-identical output.

#ifndef CBST_CONFIG_H_
#define CBST_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbst/curriculum.h"
#include "cbst/noise.h"
#include "cbst/selection.h"

namespace cbst {

enum class PipelineMode { kCbst, kStNoise, kStVanilla, kFinetuneOnly };

std::string_view ModeName(PipelineMode mode);
PipelineMode ParseMode(std::string_view name);

struct GeneratorConfig {
  std::string kind = "template";
  double alpha = 0.0;
  double unseen_nll = 20.0;
};

struct CurriculumConfig {
  DifficultyMetric metric = DifficultyMetric::kTripleCount;
  int m_c = 3;
  // Unset means "auto": the <=2 / 3-4 / >=5 split for triple counts with
  // three curricula, otherwise empirical quantiles of the pool.
  std::optional<std::vector<int>> boundaries;
};

struct DataPaths {
  std::string labeled;
  std::string unlabeled;
  std::string lexicon;  // empty: no synonyms
  std::string test;     // empty: no per-iteration evaluation
};

struct PipelineConfig {
  PipelineMode mode = PipelineMode::kCbst;
  uint64_t seed = 17;
  CurriculumConfig curriculum;
  NoiseConfig noise;  // noise.seed is derived from `seed` per iteration
  SelectionConfig selection;
  GeneratorConfig generator;
  int epochs_teacher_init = 20;
  int epochs_student = 20;
  DataPaths data;

  // Throws ConfigError on any out-of-range or inconsistent field.
  void Validate() const;

  // Canonical "key=value" lines for every key, sorted by key.
  std::string ToText() const;
};

// Every recognised key, sorted.
const std::vector<std::string>& ConfigKeys();

// Sets one key from its textual value. Throws ConfigError.
void SetConfigValue(PipelineConfig& cfg, std::string_view key,
                    std::string_view value);

// Parses a document over the defaults, then applies "key=value" overrides
// in order, then validates.
PipelineConfig ParseConfig(std::string_view document,
                           const std::vector<std::string>& overrides = {});
PipelineConfig LoadConfig(const std::filesystem::path& path,
                          const std::vector<std::string>& overrides = {});

}  // namespace cbst

#endif  // CBST_CONFIG_H_

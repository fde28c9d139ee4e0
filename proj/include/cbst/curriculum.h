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

#ifndef CBST_CURRICULUM_H_
#define CBST_CURRICULUM_H_

#include <string>
#include <string_view>
#include <vector>

#include "cbst/ingest.h"
#include "cbst/kb.h"

namespace cbst {

enum class DifficultyMetric { kTripleCount, kLinearizedLength };

std::string_view MetricName(DifficultyMetric metric);
// Throws ConfigError on an unknown name.
DifficultyMetric ParseMetric(std::string_view name);

// Partition of the unlabeled pool into m_c subsets of increasing difficulty.
// Subset k (1-based) receives inputs with boundaries[k-2] < d <= boundaries[k-1].
class CurriculumPlan {
 public:
  // Throws ConfigError unless boundaries are strictly increasing.
  CurriculumPlan(DifficultyMetric metric, std::vector<int> boundaries);

  // Three subsets split at <= 2 / 3-4 / >= 5 triples.
  static CurriculumPlan Default();

  // m_c - 1 boundaries placed at the empirical quantiles k/m_c of the pool's
  // difficulty distribution, bumped where needed to stay strictly increasing.
  static CurriculumPlan FromQuantiles(DifficultyMetric metric, int m_c,
                                      const UnlabeledDataset& pool);

  DifficultyMetric metric() const { return metric_; }
  const std::vector<int>& boundaries() const { return boundaries_; }
  int m_c() const { return static_cast<int>(boundaries_.size()) + 1; }

  // 1-based subset index for a difficulty value.
  int SubsetFor(int difficulty) const;

 private:
  DifficultyMetric metric_;
  std::vector<int> boundaries_;
};

int Difficulty(const StructuredInput& input, DifficultyMetric metric);

// Splits the pool into plan.m_c() subsets, preserving order within each.
std::vector<UnlabeledDataset> Segment(const UnlabeledDataset& pool,
                                      const CurriculumPlan& plan);

// Concatenation of subsets 1..t. Throws ConfigError unless 1 <= t <= size.
UnlabeledDataset Cumulative(const std::vector<UnlabeledDataset>& subsets,
                            int t);

}  // namespace cbst

#endif  // CBST_CURRICULUM_H_

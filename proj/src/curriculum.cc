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

#include "cbst/curriculum.h"

#include <algorithm>

#include "cbst/errors.h"

namespace cbst {

std::string_view MetricName(DifficultyMetric metric) {
  switch (metric) {
    case DifficultyMetric::kTripleCount:
      return "triple_count";
    case DifficultyMetric::kLinearizedLength:
      return "linearized_length";
  }
  return "";
}

DifficultyMetric ParseMetric(std::string_view name) {
  if (name == "triple_count") return DifficultyMetric::kTripleCount;
  if (name == "linearized_length") return DifficultyMetric::kLinearizedLength;
  throw ConfigError("unknown difficulty metric '" + std::string(name) + "'");
}

CurriculumPlan::CurriculumPlan(DifficultyMetric metric,
                               std::vector<int> boundaries)
    : metric_(metric), boundaries_(std::move(boundaries)) {
  for (size_t i = 1; i < boundaries_.size(); ++i) {
    if (boundaries_[i] <= boundaries_[i - 1]) {
      throw ConfigError("curriculum boundaries must be strictly increasing");
    }
  }
}

CurriculumPlan CurriculumPlan::Default() {
  return CurriculumPlan(DifficultyMetric::kTripleCount, {2, 4});
}

CurriculumPlan CurriculumPlan::FromQuantiles(DifficultyMetric metric, int m_c,
                                             const UnlabeledDataset& pool) {
  if (m_c < 1) throw ConfigError("curriculum.m_c must be >= 1");
  std::vector<int> values;
  values.reserve(pool.inputs.size());
  for (const StructuredInput& input : pool.inputs) {
    values.push_back(Difficulty(input, metric));
  }
  std::sort(values.begin(), values.end());
  std::vector<int> boundaries;
  for (int k = 1; k < m_c; ++k) {
    int b = 0;
    if (!values.empty()) {
      // Smallest value with at least k/m_c of the pool at or below it.
      size_t rank = (values.size() * k + m_c - 1) / m_c;
      b = values[std::max<size_t>(rank, 1) - 1];
    }
    if (!boundaries.empty() && b <= boundaries.back()) b = boundaries.back() + 1;
    boundaries.push_back(b);
  }
  return CurriculumPlan(metric, std::move(boundaries));
}

int CurriculumPlan::SubsetFor(int difficulty) const {
  auto it = std::lower_bound(boundaries_.begin(), boundaries_.end(), difficulty);
  return static_cast<int>(it - boundaries_.begin()) + 1;
}

int Difficulty(const StructuredInput& input, DifficultyMetric metric) {
  if (metric == DifficultyMetric::kTripleCount) {
    return static_cast<int>(input.size());
  }
  return static_cast<int>(Linearize(input).size());
}

std::vector<UnlabeledDataset> Segment(const UnlabeledDataset& pool,
                                      const CurriculumPlan& plan) {
  std::vector<UnlabeledDataset> subsets(plan.m_c());
  for (int k = 0; k < plan.m_c(); ++k) {
    subsets[k].name = pool.name + "#" + std::to_string(k + 1);
  }
  for (const StructuredInput& input : pool.inputs) {
    int k = plan.SubsetFor(Difficulty(input, plan.metric()));
    subsets[k - 1].inputs.push_back(input);
  }
  return subsets;
}

UnlabeledDataset Cumulative(const std::vector<UnlabeledDataset>& subsets,
                            int t) {
  if (t < 1 || t > static_cast<int>(subsets.size())) {
    throw ConfigError("curriculum step " + std::to_string(t) +
                      " outside [1, " + std::to_string(subsets.size()) + "]");
  }
  UnlabeledDataset out;
  out.name = subsets.empty() ? "" : subsets.front().name;
  if (auto pos = out.name.rfind('#'); pos != std::string::npos) {
    out.name = out.name.substr(0, pos);
  }
  for (int k = 0; k < t; ++k) {
    out.inputs.insert(out.inputs.end(), subsets[k].inputs.begin(),
                      subsets[k].inputs.end());
  }
  return out;
}

}  // namespace cbst

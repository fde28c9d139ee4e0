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
#include <numeric>
#include <string>

#include "cbst/errors.h"

namespace cbst {
namespace {

bool ContainsRun(const std::vector<std::string>& haystack,
                 const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

}  // namespace

void SelectionConfig::Validate() const {
  if (!(eps_cov >= 0.0 && eps_cov <= 1.0)) {
    throw ConfigError("selection.eps_cov must be in [0, 1]");
  }
  if (!(eps_gen > 0.0 && eps_gen <= 1.0)) {
    throw ConfigError("selection.eps_gen must be in (0, 1]");
  }
}

double Coverage(const StructuredInput& input, const TokenSeq& text) {
  const std::set<std::string> entities = ExtractEntities(input);
  if (entities.empty()) return 1.0;
  std::vector<std::string> lowered;
  lowered.reserve(text.size());
  for (const std::string& token : text.tokens()) {
    lowered.push_back(ToLowerAscii(token));
  }
  size_t found = 0;
  for (const std::string& entity : entities) {
    if (ContainsRun(lowered, SplitWhitespace(entity))) ++found;
  }
  return static_cast<double>(found) / static_cast<double>(entities.size());
}

size_t QuotaCeil(double fraction, size_t n) {
  const double exact = fraction * static_cast<double>(n);
  auto quota = static_cast<size_t>(std::ceil(exact));
  // Drop a spurious extra unit produced by rounding noise above an integer.
  if (quota > 0 && static_cast<double>(quota - 1) >= exact - 1e-9) --quota;
  return std::min(quota, n);
}

std::vector<PseudoLabeledExample> Select(
    const std::vector<PseudoLabeledExample>& candidates,
    const SelectionConfig& cfg) {
  cfg.Validate();
  std::vector<size_t> survivors;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].coverage >= cfg.eps_cov) survivors.push_back(i);
  }
  auto score = [&](size_t i) {
    const PseudoLabeledExample& c = candidates[i];
    if (cfg.length_normalize && !c.text.empty()) {
      return c.logprob / static_cast<double>(c.text.size());
    }
    return c.logprob;
  };
  std::stable_sort(survivors.begin(), survivors.end(),
                   [&](size_t a, size_t b) { return score(a) > score(b); });
  survivors.resize(QuotaCeil(cfg.eps_gen, survivors.size()));

  std::vector<PseudoLabeledExample> out;
  out.reserve(survivors.size());
  for (size_t i : survivors) out.push_back(candidates[i]);
  return out;
}

}  // namespace cbst

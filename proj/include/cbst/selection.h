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

// Pseudo-label construction: entity coverage of generated texts and the
// coverage-then-probability filter that produces the student's training set.

#ifndef CBST_SELECTION_H_
#define CBST_SELECTION_H_

#include <cstddef>
#include <vector>

#include "cbst/kb.h"

namespace cbst {

struct PseudoLabeledExample {
  StructuredInput input;
  TokenSeq text;
  double logprob = 0.0;
  double coverage = 0.0;  // in [0, 1]
  int iteration = 1;      // >= 1

  bool operator==(const PseudoLabeledExample&) const = default;
};

struct SelectionConfig {
  double eps_cov = 1.0;   // coverage threshold, inclusive
  double eps_gen = 0.5;   // fraction of coverage survivors kept, in (0, 1]
  bool length_normalize = false;

  // Throws ConfigError when a field is out of range.
  void Validate() const;
};

// Fraction of the input's canonical entities that occur in `text` as a
// contiguous, case-insensitive token run. 1.0 when there are no entities.
double Coverage(const StructuredInput& input, const TokenSeq& text);

// ceil(fraction * n), robust to representation error in `fraction`
// (0.1 * 30 keeps 3, not 4).
size_t QuotaCeil(double fraction, size_t n);

// Keeps candidates with coverage >= eps_cov, ranks the survivors by score
// (logprob, or logprob per token) descending with ties in input order, and
// returns the first QuotaCeil(eps_gen, survivors) of them in ranked order.
std::vector<PseudoLabeledExample> Select(
    const std::vector<PseudoLabeledExample>& candidates,
    const SelectionConfig& cfg);

}  // namespace cbst

#endif  // CBST_SELECTION_H_

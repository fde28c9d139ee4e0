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

// Line-delimited dataset files.
//
// Every line holds one JSON object:
//   labeled:    {"triples": [["s","p","o"], ...], "text": "..."}
//   unlabeled:  {"triples": [...]}                  ("text" is rejected)
//   pseudo:     {"triples": [...], "text": "...", "logprob": -1.5,
//                "coverage": 1.0, "iteration": 2}
// Blank lines are skipped. Errors carry "<name>:<line>:".

#ifndef CBST_INGEST_H_
#define CBST_INGEST_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cbst/kb.h"
#include "cbst/selection.h"

namespace cbst {

struct LabeledDataset {
  std::string name;
  std::vector<LabeledExample> examples;
};

struct UnlabeledDataset {
  std::string name;
  std::vector<StructuredInput> inputs;
};

LabeledDataset ParseLabeled(std::istream& in, const std::string& name);
LabeledDataset ParseLabeled(const std::filesystem::path& path);

UnlabeledDataset ParseUnlabeled(std::istream& in, const std::string& name);
UnlabeledDataset ParseUnlabeled(const std::filesystem::path& path);

std::vector<PseudoLabeledExample> ParsePseudoLabeled(std::istream& in,
                                                     const std::string& name);

void WriteLabeled(std::ostream& out, const LabeledDataset& data);
void WriteUnlabeled(std::ostream& out, const UnlabeledDataset& data);
void WritePseudoLabeled(std::ostream& out,
                        const std::vector<PseudoLabeledExample>& rows);

// Keeps the unlabeled inputs sharing at least one canonical entity with the
// labeled entity vocabulary, in their original order. Throws DataError when
// `labeled` is empty.
UnlabeledDataset FilterByEntityOverlap(const UnlabeledDataset& unlabeled,
                                       const LabeledDataset& labeled);

}  // namespace cbst

#endif  // CBST_INGEST_H_

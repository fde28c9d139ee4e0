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

// The contract every text generator satisfies. The self-training loop only
// talks to this interface, so any conditional model that can be trained by
// maximum likelihood, score a (structure, text) pair, and decode a text with
// its log-probability can play teacher and student.

#ifndef CBST_GENERATOR_H_
#define CBST_GENERATOR_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "cbst/kb.h"

namespace cbst {

struct GenerationResult {
  TokenSeq text;
  double logprob = 0.0;  // natural log, sequence level, finite and <= 0

  bool operator==(const GenerationResult&) const = default;
};

// Perturbs a training input. The second argument identifies the
// (epoch, sample) draw so the noise is reproducible.
using InputNoise =
    std::function<StructuredInput(const StructuredInput&, uint64_t)>;

class Generator {
 public:
  virtual ~Generator() = default;

  virtual std::string_view kind() const = 0;

  // Identifies the initialization state this model descends from.
  virtual const std::string& base_checkpoint_id() const = 0;

  // -log P(text | input) >= 0. Throws DataError on an empty text.
  virtual double Nll(const StructuredInput& input,
                     const TokenSeq& text) const = 0;

  // Greedy decoding. Deterministic.
  virtual GenerationResult Generate(const StructuredInput& input) const = 0;

  // Returns a new model fitted on `data` starting from this one; `this` is
  // left untouched. When `noise` is set, each input is perturbed with
  // sample index epoch * data.size() + i before it is used.
  virtual std::unique_ptr<Generator> Train(std::span<const LabeledExample> data,
                                           int epochs,
                                           const InputNoise& noise = {}) const = 0;

  virtual std::unique_ptr<Generator> Clone() const = 0;

  // Versioned, canonical serialization: equal models give equal bytes.
  virtual std::string Save() const = 0;
};

// Restores any generator from Save() output. Throws FormatError.
std::unique_ptr<Generator> LoadGenerator(std::string_view bytes);

}  // namespace cbst

#endif  // CBST_GENERATOR_H_

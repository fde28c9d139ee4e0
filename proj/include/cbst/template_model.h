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

#ifndef CBST_TEMPLATE_MODEL_H_
#define CBST_TEMPLATE_MODEL_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbst/generator.h"

namespace cbst {

enum class SlotRole { kSubject, kObject };

struct Slot {
  SlotRole role;
  std::string predicate;
  int occurrence;  // 1-based among triples sharing the predicate

  bool operator==(const Slot&) const = default;
};

// Renders SLOT(subj|obj,<predicate>,<k>). The predicate is percent-escaped so
// the token holds no whitespace, commas or parentheses.
std::string SlotToken(const Slot& slot);
std::optional<Slot> ParseSlotToken(std::string_view token);

// A delexicalized template generator.
//
// Training texts are delexicalized against their inputs: entity mentions
// become slot tokens, and the resulting template is counted under the
// input's signature (the sorted predicate multiset). Scoring uses smoothed
// relative frequencies
//
//   P(tpl | sig) = (count(tpl) + alpha) / (total(sig) + alpha * (distinct + 1))
//
// where an unseen template gets the alpha share. Decoding picks the most
// frequent template for the signature, or, for an unseen signature, chains
// the best single-predicate template of each triple in input order.
class TemplateModel final : public Generator {
 public:
  using Signature = std::vector<std::string>;
  using Template = std::vector<std::string>;
  using TemplateCounts = std::map<Template, uint64_t>;

  static constexpr std::string_view kKind = "template";
  static constexpr std::string_view kFormatVersion = "cbst-template-model/1";
  static constexpr std::string_view kEmptyBaseId = "template:empty";

  // Throws ConfigError when alpha < 0 or unseen_nll is not positive.
  explicit TemplateModel(double alpha = 0.0, double unseen_nll = 20.0,
                         std::string base_id = std::string(kEmptyBaseId));

  static Signature SignatureOf(const StructuredInput& input);

  // Replaces case-insensitive entity mentions, longest entity first and left
  // to right without overlaps, by slot tokens. An entity string shared by
  // several triple positions binds to the first position in triple order.
  static Template Delexicalize(const StructuredInput& input,
                               const TokenSeq& text);

  // Substitutes each resolvable slot with the raw entity tokens of `input`.
  static TokenSeq Fill(const Template& tpl, const StructuredInput& input);

  // Restores a model from Save() bytes. Throws FormatError.
  static std::unique_ptr<TemplateModel> Load(std::string_view bytes);

  std::string_view kind() const override { return kKind; }
  const std::string& base_checkpoint_id() const override { return base_id_; }
  double Nll(const StructuredInput& input, const TokenSeq& text) const override;
  GenerationResult Generate(const StructuredInput& input) const override;
  std::unique_ptr<Generator> Train(std::span<const LabeledExample> data,
                                   int epochs,
                                   const InputNoise& noise = {}) const override;
  std::unique_ptr<Generator> Clone() const override;
  std::string Save() const override;

  // Smoothed P(tpl | sig); nullopt for an unseen signature.
  std::optional<double> Probability(const Signature& sig,
                                    const Template& tpl) const;

  double alpha() const { return alpha_; }
  double unseen_nll() const { return unseen_nll_; }
  const std::map<Signature, TemplateCounts>& table() const { return table_; }

 private:
  struct Choice {
    const Template* tpl;
    double logprob;
  };
  // Most frequent template of a seen signature, ties to the smallest.
  std::optional<Choice> Best(const Signature& sig) const;

  double alpha_;
  double unseen_nll_;
  std::string base_id_;
  std::map<Signature, TemplateCounts> table_;
};

}  // namespace cbst

#endif  // CBST_TEMPLATE_MODEL_H_

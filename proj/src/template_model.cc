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

#include "cbst/template_model.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

#include "cbst/errors.h"
#include "json.hpp"

namespace cbst {
namespace {

using nlohmann::json;

constexpr std::string_view kSlotPrefix = "SLOT(";

bool NeedsEscape(char c) {
  return c == '%' || c == ',' || c == '(' || c == ')' ||
         std::isspace(static_cast<unsigned char>(c));
}

std::string Escape(std::string_view raw) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char c : raw) {
    if (NeedsEscape(c)) {
      auto u = static_cast<unsigned char>(c);
      out.push_back('%');
      out.push_back(kHex[u >> 4]);
      out.push_back(kHex[u & 0xF]);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::optional<std::string> Unescape(std::string_view escaped) {
  std::string out;
  for (size_t i = 0; i < escaped.size(); ++i) {
    if (escaped[i] != '%') {
      out.push_back(escaped[i]);
      continue;
    }
    if (i + 2 >= escaped.size()) return std::nullopt;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(escaped.data() + i + 1,
                                     escaped.data() + i + 3, value, 16);
    if (ec != std::errc() || ptr != escaped.data() + i + 3) return std::nullopt;
    out.push_back(static_cast<char>(value));
    i += 2;
  }
  return out;
}

[[noreturn]] void BadCheckpoint(const std::string& why) {
  throw FormatError("invalid checkpoint (expected format " +
                    std::string(TemplateModel::kFormatVersion) + "): " + why);
}

}  // namespace

std::string SlotToken(const Slot& slot) {
  std::string out(kSlotPrefix);
  out += slot.role == SlotRole::kSubject ? "subj" : "obj";
  out += ',';
  out += Escape(slot.predicate);
  out += ',';
  out += std::to_string(slot.occurrence);
  out += ')';
  return out;
}

std::optional<Slot> ParseSlotToken(std::string_view token) {
  if (!token.starts_with(kSlotPrefix) || !token.ends_with(')')) {
    return std::nullopt;
  }
  std::string_view body =
      token.substr(kSlotPrefix.size(), token.size() - kSlotPrefix.size() - 1);
  size_t first = body.find(',');
  size_t last = body.rfind(',');
  if (first == std::string_view::npos || first == last) return std::nullopt;
  std::string_view role = body.substr(0, first);
  std::optional<std::string> predicate =
      Unescape(body.substr(first + 1, last - first - 1));
  std::string_view index = body.substr(last + 1);
  int occurrence = 0;
  auto [ptr, ec] =
      std::from_chars(index.data(), index.data() + index.size(), occurrence);
  if (!predicate || predicate->empty() || ec != std::errc() ||
      ptr != index.data() + index.size() || occurrence < 1) {
    return std::nullopt;
  }
  if (role == "subj") return Slot{SlotRole::kSubject, *predicate, occurrence};
  if (role == "obj") return Slot{SlotRole::kObject, *predicate, occurrence};
  return std::nullopt;
}

TemplateModel::TemplateModel(double alpha, double unseen_nll,
                             std::string base_id)
    : alpha_(alpha), unseen_nll_(unseen_nll), base_id_(std::move(base_id)) {
  if (!(alpha_ >= 0.0) || !std::isfinite(alpha_)) {
    throw ConfigError("generator.alpha must be a finite number >= 0");
  }
  if (!(unseen_nll_ > 0.0) || !std::isfinite(unseen_nll_)) {
    throw ConfigError("generator.unseen_nll must be a finite number > 0");
  }
}

TemplateModel::Signature TemplateModel::SignatureOf(
    const StructuredInput& input) {
  Signature sig;
  sig.reserve(input.size());
  for (const Triple& t : input.triples()) sig.push_back(t.predicate());
  std::sort(sig.begin(), sig.end());
  return sig;
}

TemplateModel::Template TemplateModel::Delexicalize(
    const StructuredInput& input, const TokenSeq& text) {
  struct Candidate {
    std::vector<std::string> tokens;  // lowercase
    std::string slot;
  };
  std::vector<Candidate> candidates;
  std::set<std::string> seen;
  std::map<std::string, int> occurrences;
  for (const Triple& t : input.triples()) {
    int k = ++occurrences[t.predicate()];
    for (SlotRole role : {SlotRole::kSubject, SlotRole::kObject}) {
      const std::string& surface =
          role == SlotRole::kSubject ? t.subject() : t.object();
      std::string canonical = NormalizeEntity(surface);
      if (!seen.insert(canonical).second) continue;
      candidates.push_back(
          {SplitWhitespace(canonical), SlotToken({role, t.predicate(), k})});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.tokens.size() > b.tokens.size();
                   });

  const std::vector<std::string>& raw = text.tokens();
  std::vector<std::string> lowered;
  lowered.reserve(raw.size());
  for (const std::string& token : raw) lowered.push_back(ToLowerAscii(token));

  std::vector<bool> covered(raw.size(), false);
  // Start position -> (span length, slot token).
  std::map<size_t, std::pair<size_t, const std::string*>> matches;
  for (const Candidate& c : candidates) {
    const size_t len = c.tokens.size();
    size_t pos = 0;
    while (len > 0 && pos + len <= lowered.size()) {
      bool ok = true;
      for (size_t j = 0; j < len && ok; ++j) {
        ok = !covered[pos + j] && lowered[pos + j] == c.tokens[j];
      }
      if (!ok) {
        ++pos;
        continue;
      }
      std::fill(covered.begin() + pos, covered.begin() + pos + len, true);
      matches[pos] = {len, &c.slot};
      pos += len;
    }
  }

  Template out;
  for (size_t pos = 0; pos < raw.size();) {
    auto it = matches.find(pos);
    if (it == matches.end()) {
      out.push_back(raw[pos++]);
    } else {
      out.push_back(*it->second.second);
      pos += it->second.first;
    }
  }
  return out;
}

TokenSeq TemplateModel::Fill(const Template& tpl, const StructuredInput& input) {
  std::vector<std::string> out;
  for (const std::string& token : tpl) {
    std::optional<Slot> slot = ParseSlotToken(token);
    const Triple* target = nullptr;
    if (slot) {
      int seen = 0;
      for (const Triple& t : input.triples()) {
        if (t.predicate() == slot->predicate && ++seen == slot->occurrence) {
          target = &t;
          break;
        }
      }
    }
    if (target == nullptr) {
      out.push_back(token);
      continue;
    }
    const std::string& surface =
        slot->role == SlotRole::kSubject ? target->subject() : target->object();
    for (std::string& piece : SplitWhitespace(surface)) {
      out.push_back(std::move(piece));
    }
  }
  return TokenSeq(std::move(out));
}

std::optional<double> TemplateModel::Probability(const Signature& sig,
                                                 const Template& tpl) const {
  auto it = table_.find(sig);
  if (it == table_.end()) return std::nullopt;
  const TemplateCounts& counts = it->second;
  double total = 0.0;
  for (const auto& [_, count] : counts) total += static_cast<double>(count);
  const double z = total + alpha_ * static_cast<double>(counts.size() + 1);
  auto hit = counts.find(tpl);
  const double mass =
      hit == counts.end() ? alpha_ : static_cast<double>(hit->second) + alpha_;
  return mass / z;
}

double TemplateModel::Nll(const StructuredInput& input,
                          const TokenSeq& text) const {
  if (text.empty()) throw DataError("cannot score an empty text");
  std::optional<double> p =
      Probability(SignatureOf(input), Delexicalize(input, text));
  // Unseen signature, or an unseen template with no smoothing mass.
  if (!p || *p <= 0.0) return unseen_nll_;
  return 0.0 - std::log(*p);
}

std::optional<TemplateModel::Choice> TemplateModel::Best(
    const Signature& sig) const {
  auto it = table_.find(sig);
  if (it == table_.end() || it->second.empty()) return std::nullopt;
  const Template* best = nullptr;
  uint64_t best_count = 0;
  for (const auto& [tpl, count] : it->second) {
    if (count > best_count) {
      best = &tpl;
      best_count = count;
    }
  }
  return Choice{best, std::log(*Probability(sig, *best))};
}

GenerationResult TemplateModel::Generate(const StructuredInput& input) const {
  if (std::optional<Choice> choice = Best(SignatureOf(input))) {
    // Score the emitted text rather than the chosen template: they differ
    // only when filling creates a new entity match (e.g. subject == object).
    TokenSeq text = Fill(*choice->tpl, input);
    const double logprob = 0.0 - Nll(input, text);
    return {std::move(text), logprob};
  }
  std::vector<std::string> tokens;
  double logprob = 0.0;
  for (const Triple& t : input.triples()) {
    StructuredInput single({t}, input.source_kind());
    std::vector<std::string> clause;
    if (std::optional<Choice> choice = Best({t.predicate()})) {
      clause = Fill(*choice->tpl, single).tokens();
      logprob += choice->logprob;
    } else {
      for (const std::string* field : {&t.subject(), &t.predicate(), &t.object()}) {
        for (std::string& piece : SplitWhitespace(*field)) {
          clause.push_back(std::move(piece));
        }
      }
      logprob -= unseen_nll_;
    }
    tokens.insert(tokens.end(), clause.begin(), clause.end());
  }
  return {TokenSeq(std::move(tokens)), logprob};
}

std::unique_ptr<Generator> TemplateModel::Train(
    std::span<const LabeledExample> data, int epochs,
    const InputNoise& noise) const {
  if (data.empty()) throw DataError("cannot train on an empty dataset");
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  auto model = std::make_unique<TemplateModel>(*this);
  const uint64_t n = data.size();
  for (int epoch = 0; epoch < epochs; ++epoch) {
    for (uint64_t i = 0; i < n; ++i) {
      const LabeledExample& ex = data[i];
      if (noise) {
        StructuredInput noisy = noise(ex.input, epoch * n + i);
        ++model->table_[SignatureOf(noisy)][Delexicalize(noisy, ex.text)];
      } else {
        ++model->table_[SignatureOf(ex.input)][Delexicalize(ex.input, ex.text)];
      }
    }
  }
  return model;
}

std::unique_ptr<Generator> TemplateModel::Clone() const {
  return std::make_unique<TemplateModel>(*this);
}

std::string TemplateModel::Save() const {
  json signatures = json::array();
  for (const auto& [sig, counts] : table_) {
    json templates = json::array();
    for (const auto& [tpl, count] : counts) {
      templates.push_back({{"tokens", tpl}, {"count", count}});
    }
    signatures.push_back({{"predicates", sig}, {"templates", templates}});
  }
  json body = {{"alpha", alpha_},
               {"unseen_nll", unseen_nll_},
               {"base_checkpoint_id", base_id_},
               {"signatures", signatures}};
  return std::string(kFormatVersion) + "\n" + body.dump() + "\n";
}

std::unique_ptr<TemplateModel> TemplateModel::Load(std::string_view bytes) {
  const std::string header = std::string(kFormatVersion) + "\n";
  if (!bytes.starts_with(header)) {
    BadCheckpoint("missing version header");
  }
  json body;
  try {
    body = json::parse(bytes.substr(header.size()));
  } catch (const json::exception& e) {
    BadCheckpoint(e.what());
  }
  try {
    auto model = std::make_unique<TemplateModel>(
        body.at("alpha").get<double>(), body.at("unseen_nll").get<double>(),
        body.at("base_checkpoint_id").get<std::string>());
    for (const json& entry : body.at("signatures")) {
      Signature sig = entry.at("predicates").get<Signature>();
      if (sig.empty() || !std::is_sorted(sig.begin(), sig.end())) {
        BadCheckpoint("signature must be a non-empty sorted predicate list");
      }
      if (model->table_.count(sig) != 0) BadCheckpoint("duplicate signature");
      TemplateCounts& counts = model->table_[sig];
      for (const json& t : entry.at("templates")) {
        Template tpl = t.at("tokens").get<Template>();
        uint64_t count = t.at("count").get<uint64_t>();
        if (count < 1) BadCheckpoint("template count must be >= 1");
        if (tpl.empty() || counts.count(tpl) != 0) {
          BadCheckpoint("empty or duplicate template");
        }
        for (const std::string& token : tpl) {
          if (SplitWhitespace(token) != std::vector<std::string>{token}) {
            BadCheckpoint("malformed template token '" + token + "'");
          }
          std::optional<Slot> slot = ParseSlotToken(token);
          if (slot && !std::binary_search(sig.begin(), sig.end(), slot->predicate)) {
            BadCheckpoint("slot " + token + " names a predicate outside its signature");
          }
        }
        counts[std::move(tpl)] = count;
      }
    }
    return model;
  } catch (const json::exception& e) {
    BadCheckpoint(e.what());
  } catch (const ConfigError& e) {
    BadCheckpoint(e.what());
  }
}

std::unique_ptr<Generator> LoadGenerator(std::string_view bytes) {
  if (bytes.starts_with(TemplateModel::kFormatVersion)) {
    return TemplateModel::Load(bytes);
  }
  throw FormatError("unrecognized checkpoint (expected format " +
                    std::string(TemplateModel::kFormatVersion) + ")");
}

}  // namespace cbst

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

#include "cbst/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cbst/errors.h"
#include "cbst/format.h"

namespace cbst {
namespace {

std::string Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const size_t begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return "";
  return std::string(s.substr(begin, s.find_last_not_of(kSpace) - begin + 1));
}

double ParseDouble(std::string_view key, std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw ConfigError(std::string(key) + ": expected a number, got '" +
                      std::string(text) + "'");
  }
  return v;
}

template <typename Int>
Int ParseInt(std::string_view key, std::string_view text) {
  Int v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" +
                      std::string(text) + "'");
  }
  return v;
}

bool ParseBool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "on") return true;
  if (text == "false" || text == "0" || text == "off") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" +
                    std::string(text) + "'");
}

std::optional<std::vector<int>> ParseBoundaries(std::string_view key,
                                                std::string_view text) {
  if (text == "auto") return std::nullopt;
  std::vector<int> out;
  std::string s(text);
  std::stringstream in(s);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    out.push_back(ParseInt<int>(key, Trim(piece)));
  }
  return out;
}

std::string FormatBoundaries(const std::optional<std::vector<int>>& b) {
  if (!b) return "auto";
  std::string out;
  for (size_t i = 0; i < b->size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string((*b)[i]);
  }
  return out;
}

struct KeyHandler {
  std::function<void(PipelineConfig&, std::string_view)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

const std::map<std::string, KeyHandler, std::less<>>& Handlers() {
  using C = PipelineConfig;
  using V = std::string_view;
  static const auto* handlers = new std::map<std::string, KeyHandler, std::less<>>{
      {"mode",
       {[](C& c, V v) { c.mode = ParseMode(v); },
        [](const C& c) { return std::string(ModeName(c.mode)); }}},
      {"seed",
       {[](C& c, V v) { c.seed = ParseInt<uint64_t>("seed", v); },
        [](const C& c) { return std::to_string(c.seed); }}},
      {"curriculum.metric",
       {[](C& c, V v) { c.curriculum.metric = ParseMetric(v); },
        [](const C& c) { return std::string(MetricName(c.curriculum.metric)); }}},
      {"curriculum.m_c",
       {[](C& c, V v) { c.curriculum.m_c = ParseInt<int>("curriculum.m_c", v); },
        [](const C& c) { return std::to_string(c.curriculum.m_c); }}},
      {"curriculum.boundaries",
       {[](C& c, V v) {
          c.curriculum.boundaries = ParseBoundaries("curriculum.boundaries", v);
        },
        [](const C& c) { return FormatBoundaries(c.curriculum.boundaries); }}},
      {"noise.p_word",
       {[](C& c, V v) { c.noise.p_word = ParseDouble("noise.p_word", v); },
        [](const C& c) { return FormatDouble(c.noise.p_word); }}},
      {"noise.p_triple",
       {[](C& c, V v) { c.noise.p_triple = ParseDouble("noise.p_triple", v); },
        [](const C& c) { return FormatDouble(c.noise.p_triple); }}},
      {"selection.eps_cov",
       {[](C& c, V v) { c.selection.eps_cov = ParseDouble("selection.eps_cov", v); },
        [](const C& c) { return FormatDouble(c.selection.eps_cov); }}},
      {"selection.eps_gen",
       {[](C& c, V v) { c.selection.eps_gen = ParseDouble("selection.eps_gen", v); },
        [](const C& c) { return FormatDouble(c.selection.eps_gen); }}},
      {"selection.length_normalize",
       {[](C& c, V v) {
          c.selection.length_normalize = ParseBool("selection.length_normalize", v);
        },
        [](const C& c) {
          return std::string(c.selection.length_normalize ? "true" : "false");
        }}},
      {"generator.kind",
       {[](C& c, V v) { c.generator.kind = std::string(v); },
        [](const C& c) { return c.generator.kind; }}},
      {"generator.alpha",
       {[](C& c, V v) { c.generator.alpha = ParseDouble("generator.alpha", v); },
        [](const C& c) { return FormatDouble(c.generator.alpha); }}},
      {"generator.unseen_nll",
       {[](C& c, V v) {
          c.generator.unseen_nll = ParseDouble("generator.unseen_nll", v);
        },
        [](const C& c) { return FormatDouble(c.generator.unseen_nll); }}},
      {"train.epochs_teacher_init",
       {[](C& c, V v) {
          c.epochs_teacher_init = ParseInt<int>("train.epochs_teacher_init", v);
        },
        [](const C& c) { return std::to_string(c.epochs_teacher_init); }}},
      {"train.epochs_student",
       {[](C& c, V v) { c.epochs_student = ParseInt<int>("train.epochs_student", v); },
        [](const C& c) { return std::to_string(c.epochs_student); }}},
      {"data.labeled",
       {[](C& c, V v) { c.data.labeled = std::string(v); },
        [](const C& c) { return c.data.labeled; }}},
      {"data.unlabeled",
       {[](C& c, V v) { c.data.unlabeled = std::string(v); },
        [](const C& c) { return c.data.unlabeled; }}},
      {"data.lexicon",
       {[](C& c, V v) { c.data.lexicon = std::string(v); },
        [](const C& c) { return c.data.lexicon; }}},
      {"data.test",
       {[](C& c, V v) { c.data.test = std::string(v); },
        [](const C& c) { return c.data.test; }}},
  };
  return *handlers;
}

std::pair<std::string, std::string> SplitAssignment(std::string_view line) {
  size_t eq = line.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("expected key=value, got '" + std::string(line) + "'");
  }
  return {Trim(line.substr(0, eq)), Trim(line.substr(eq + 1))};
}

}  // namespace

std::string_view ModeName(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::kCbst:
      return "cbst";
    case PipelineMode::kStNoise:
      return "st_noise";
    case PipelineMode::kStVanilla:
      return "st_vanilla";
    case PipelineMode::kFinetuneOnly:
      return "finetune_only";
  }
  return "";
}

PipelineMode ParseMode(std::string_view name) {
  for (PipelineMode m : {PipelineMode::kCbst, PipelineMode::kStNoise,
                         PipelineMode::kStVanilla, PipelineMode::kFinetuneOnly}) {
    if (ModeName(m) == name) return m;
  }
  throw ConfigError("unknown mode '" + std::string(name) + "'");
}

const std::vector<std::string>& ConfigKeys() {
  static const auto* keys = [] {
    auto* out = new std::vector<std::string>;
    for (const auto& [key, _] : Handlers()) out->push_back(key);
    return out;
  }();
  return *keys;
}

void SetConfigValue(PipelineConfig& cfg, std::string_view key,
                    std::string_view value) {
  auto it = Handlers().find(key);
  if (it == Handlers().end()) {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
  it->second.set(cfg, value);
}

void PipelineConfig::Validate() const {
  if (curriculum.m_c < 1) throw ConfigError("curriculum.m_c must be >= 1");
  if (curriculum.boundaries) {
    if (static_cast<int>(curriculum.boundaries->size()) != curriculum.m_c - 1) {
      throw ConfigError("curriculum.boundaries must hold m_c - 1 values");
    }
    CurriculumPlan(curriculum.metric, *curriculum.boundaries);
  }
  noise.Validate();
  selection.Validate();
  if (generator.kind != "template") {
    throw ConfigError("unknown generator.kind '" + generator.kind + "'");
  }
  if (!(generator.alpha >= 0.0)) throw ConfigError("generator.alpha must be >= 0");
  if (!(generator.unseen_nll > 0.0)) {
    throw ConfigError("generator.unseen_nll must be > 0");
  }
  if (epochs_teacher_init < 1) {
    throw ConfigError("train.epochs_teacher_init must be >= 1");
  }
  if (epochs_student < 1) throw ConfigError("train.epochs_student must be >= 1");
}

std::string PipelineConfig::ToText() const {
  std::string out;
  for (const auto& [key, handler] : Handlers()) {
    out += key + "=" + handler.get(*this) + "\n";
  }
  return out;
}

PipelineConfig ParseConfig(std::string_view document,
                           const std::vector<std::string>& overrides) {
  PipelineConfig cfg;
  std::set<std::string> seen;
  std::string doc(document);
  std::istringstream in(doc);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    try {
      auto [key, value] = SplitAssignment(trimmed);
      if (!seen.insert(key).second) {
        throw ConfigError("duplicate config key '" + key + "'");
      }
      SetConfigValue(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  for (const std::string& override_text : overrides) {
    auto [key, value] = SplitAssignment(override_text);
    SetConfigValue(cfg, key, value);
  }
  cfg.Validate();
  return cfg;
}

PipelineConfig LoadConfig(const std::filesystem::path& path,
                          const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), overrides);
}

}  // namespace cbst

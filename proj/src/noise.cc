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

#include "cbst/noise.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "cbst/errors.h"

namespace cbst {
namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool Draw(double p, NoiseRng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::string SubstituteField(const std::string& field,
                            const SynonymLexicon& lexicon, double p_word,
                            NoiseRng& rng) {
  std::vector<std::string> tokens = SplitWhitespace(field);
  for (std::string& token : tokens) {
    if (!Draw(p_word, rng)) continue;
    if (const std::string* synonym = lexicon.Lookup(token)) token = *synonym;
  }
  return JoinTokens(tokens);
}

}  // namespace

SynonymLexicon::SynonymLexicon(
    std::map<std::string, std::vector<std::string>> entries) {
  for (auto& [word, synonyms] : entries) {
    std::string key = ToLowerAscii(word);
    if (SplitWhitespace(key).size() != 1) {
      throw DataError("lexicon key '" + word + "' is not a single token");
    }
    if (synonyms.empty()) {
      throw DataError("lexicon entry '" + word + "' has no synonyms");
    }
    for (const std::string& synonym : synonyms) {
      std::vector<std::string> pieces = SplitWhitespace(synonym);
      if (pieces.size() != 1 || pieces.front() != synonym) {
        throw DataError("synonym '" + synonym + "' is not a single token");
      }
      if (ToLowerAscii(synonym) == key) {
        throw DataError("synonym of '" + word + "' equals its key");
      }
      for (std::string_view marker :
           {kSubjectMarker, kPredicateMarker, kObjectMarker}) {
        if (synonym.find(marker) != std::string::npos) {
          throw DataError("synonym '" + synonym + "' contains a marker token");
        }
      }
    }
    entries_[key] = std::move(synonyms);
  }
}

SynonymLexicon SynonymLexicon::Parse(std::istream& in, const std::string& name) {
  std::map<std::string, std::vector<std::string>> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (SplitWhitespace(line).empty() || line[0] == '#') continue;
    auto where = [&] { return name + ":" + std::to_string(lineno) + ": "; };
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(where() + "expected word<TAB>synonyms");
    }
    std::string word = JoinTokens(SplitWhitespace(line.substr(0, tab)));
    std::vector<std::string> synonyms;
    std::string rest = line.substr(tab + 1);
    size_t start = 0;
    while (start <= rest.size()) {
      size_t comma = rest.find(',', start);
      if (comma == std::string::npos) comma = rest.size();
      std::string synonym = JoinTokens(SplitWhitespace(rest.substr(start, comma - start)));
      if (!synonym.empty()) synonyms.push_back(std::move(synonym));
      start = comma + 1;
    }
    if (entries.count(ToLowerAscii(word)) != 0) {
      throw DataError(where() + "duplicate lexicon key '" + word + "'");
    }
    try {
      // Validate per line so errors carry the line number.
      SynonymLexicon({{word, synonyms}});
    } catch (const DataError& e) {
      throw DataError(where() + e.what());
    }
    entries[ToLowerAscii(word)] = std::move(synonyms);
  }
  return SynonymLexicon(std::move(entries));
}

SynonymLexicon SynonymLexicon::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return Parse(in, path.string());
}

SynonymLexicon SynonymLexicon::BuiltinDemo() {
  return SynonymLexicon({
      {"pudding", {"dessert"}},
      {"served", {"acted", "offered"}},
      {"occupation", {"job"}},
      {"status", {"condition"}},
      {"birth", {"natal"}},
      {"place", {"location"}},
      {"leader", {"head"}},
      {"country", {"nation"}},
  });
}

void SynonymLexicon::Write(std::ostream& out) const {
  for (const auto& [word, synonyms] : entries_) {
    out << word << '\t';
    for (size_t i = 0; i < synonyms.size(); ++i) {
      if (i > 0) out << ',';
      out << synonyms[i];
    }
    out << '\n';
  }
}

const std::string* SynonymLexicon::Lookup(const std::string& word) const {
  auto it = entries_.find(ToLowerAscii(word));
  return it == entries_.end() ? nullptr : &it->second.front();
}

void NoiseConfig::Validate() const {
  if (!(p_word >= 0.0 && p_word <= 1.0)) {
    throw ConfigError("noise.p_word must be in [0, 1]");
  }
  if (!(p_triple >= 0.0 && p_triple <= 1.0)) {
    throw ConfigError("noise.p_triple must be in [0, 1]");
  }
}

NoiseRng SampleRng(uint64_t seed, uint64_t sample_index) {
  return NoiseRng(SplitMix64(seed ^ SplitMix64(sample_index)));
}

StructuredInput SubstituteWords(const StructuredInput& input,
                                const SynonymLexicon& lexicon, double p_word,
                                NoiseRng& rng) {
  std::vector<Triple> triples;
  triples.reserve(input.size());
  for (const Triple& t : input.triples()) {
    std::string subject = SubstituteField(t.subject(), lexicon, p_word, rng);
    std::string predicate = SubstituteField(t.predicate(), lexicon, p_word, rng);
    std::string object = SubstituteField(t.object(), lexicon, p_word, rng);
    triples.emplace_back(subject, predicate, object);
  }
  return StructuredInput(std::move(triples), input.source_kind());
}

StructuredInput ReorderTriples(const StructuredInput& input, double p_triple,
                               NoiseRng& rng) {
  if (!Draw(p_triple, rng)) return input;
  std::vector<Triple> triples = input.triples();
  for (size_t i = triples.size(); i > 1; --i) {
    size_t j = std::uniform_int_distribution<size_t>(0, i - 1)(rng);
    std::swap(triples[i - 1], triples[j]);
  }
  return StructuredInput(std::move(triples), input.source_kind());
}

StructuredInput ApplyNoise(const StructuredInput& input,
                           const SynonymLexicon& lexicon,
                           const NoiseConfig& cfg, uint64_t sample_index) {
  NoiseRng rng = SampleRng(cfg.seed, sample_index);
  StructuredInput substituted = SubstituteWords(input, lexicon, cfg.p_word, rng);
  return ReorderTriples(substituted, cfg.p_triple, rng);
}

}  // namespace cbst

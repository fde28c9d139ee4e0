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

// Input-side noise for student training: synonym substitution inside triple
// fields and random reordering of the triple list.

#ifndef CBST_NOISE_H_
#define CBST_NOISE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cbst/kb.h"

namespace cbst {

// Lowercase word -> ordered, non-empty list of single-token synonyms.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;
  // Throws DataError on an empty synonym list, a synonym equal to its key,
  // or a synonym that is not a single token.
  explicit SynonymLexicon(std::map<std::string, std::vector<std::string>> entries);

  // Parses "word<TAB>syn1,syn2,..." lines. Blank lines and lines starting
  // with '#' are skipped.
  static SynonymLexicon Parse(std::istream& in, const std::string& name);
  static SynonymLexicon Load(const std::filesystem::path& path);

  // Small fixed lexicon used by tests and demos.
  static SynonymLexicon BuiltinDemo();

  // Inverse of Parse, one sorted line per word.
  void Write(std::ostream& out) const;

  // First listed synonym of the lowercased word, or nullptr.
  const std::string* Lookup(const std::string& word) const;

  const std::map<std::string, std::vector<std::string>>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

struct NoiseConfig {
  double p_word = 0.4;
  double p_triple = 0.4;
  uint64_t seed = 0;

  // Throws ConfigError unless both probabilities lie in [0, 1].
  void Validate() const;
  bool IsIdentity() const { return p_word == 0.0 && p_triple == 0.0; }
};

using NoiseRng = std::mt19937_64;

// Independent stream for one sample; a pure function of (seed, index).
NoiseRng SampleRng(uint64_t seed, uint64_t sample_index);

// Each whitespace token of every field is replaced, with probability p_word,
// by its first synonym when the lexicon has one. One draw per token.
StructuredInput SubstituteWords(const StructuredInput& input,
                                const SynonymLexicon& lexicon, double p_word,
                                NoiseRng& rng);

// With probability p_triple, applies a Fisher-Yates shuffle to the triples.
StructuredInput ReorderTriples(const StructuredInput& input, double p_triple,
                               NoiseRng& rng);

// SubstituteWords then ReorderTriples on SampleRng(cfg.seed, sample_index).
StructuredInput ApplyNoise(const StructuredInput& input,
                           const SynonymLexicon& lexicon,
                           const NoiseConfig& cfg, uint64_t sample_index);

}  // namespace cbst

#endif  // CBST_NOISE_H_

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

// A small synthetic data-to-text world with known gold realizations, used
// for end-to-end experiments and demos.
//
// There are 15 two-word "labeled" predicates, each word having one synonym in
// the lexicon. The 25 "unlabeled-only" predicates are lexical variants of
// them (one or both words swapped for the synonym) and share the gold
// realization of the predicate they vary. Triples inside a graph are listed
// in (predicate, subject, object) order. Every triple is realized as
// "<subject> <verb phrase> <object> ." and multi-triple texts concatenate
// the clauses in input order. Entities are two-token names, distinct within
// a graph.
//
// Only the labeled predicates appear in the labeled pairs, so a fine-tuned
// template model can realize the variants only through the canned back-off.
// Self-training with word-substitution noise can learn them: a noisy copy of
// a correctly realized pseudo pair carries a variant predicate together with
// the right verb phrase.

#ifndef CBST_SYNTHETIC_H_
#define CBST_SYNTHETIC_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cbst/ingest.h"
#include "cbst/noise.h"

namespace cbst {

struct SyntheticWorldSpec {
  int labeled_predicates = 15;       // <= 15
  int unlabeled_only_predicates = 25;  // <= 2 * labeled_predicates
  int labeled_pairs = 30;            // singles first, then adjacent pairs
  int unlabeled_graphs = 2000;
  int test_pairs = 300;
  int min_triples = 1;
  int max_triples = 8;
  // Probability that an unlabeled triple uses a labeled predicate.
  double unlabeled_labeled_share = 0.8;
  uint64_t seed = 17;
};

struct SyntheticWorld {
  LabeledDataset labeled;
  UnlabeledDataset unlabeled;
  LabeledDataset test;
  SynonymLexicon lexicon;
  std::vector<std::string> labeled_predicates;
  std::vector<std::string> unlabeled_only_predicates;
  std::map<std::string, std::string> verb_phrase;  // predicate -> gold verb
};

SyntheticWorld BuildSyntheticWorld(const SyntheticWorldSpec& spec = {});

// Gold text for an input over the world's predicates.
TokenSeq GoldText(const SyntheticWorld& world, const StructuredInput& input);

}  // namespace cbst

#endif  // CBST_SYNTHETIC_H_

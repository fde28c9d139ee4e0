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

#include "cbst/synthetic.h"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <tuple>

#include "cbst/errors.h"

namespace cbst {
namespace {

struct BasePredicate {
  const char* first;
  const char* second;
  const char* first_synonym;
  const char* second_synonym;
  const char* verb;
};

constexpr std::array<BasePredicate, 15> kBase = {{
    {"birth", "place", "natal", "spot", "was born in"},
    {"home", "town", "native", "city", "grew up in"},
    {"main", "author", "chief", "writer", "was written by"},
    {"lead", "actor", "star", "performer", "stars"},
    {"record", "label", "album", "imprint", "was released by"},
    {"head", "coach", "top", "trainer", "is coached by"},
    {"club", "owner", "team", "proprietor", "is owned by"},
    {"wedded", "spouse", "married", "consort", "is wed to"},
    {"building", "architect", "structure", "designer", "was designed by"},
    {"river", "mouth", "stream", "outlet", "flows into"},
    {"party", "leader", "faction", "boss", "is led by"},
    {"music", "genre", "sound", "style", "plays"},
    {"county", "seat", "district", "hub", "is governed from"},
    {"debut", "side", "first", "squad", "debuted for"},
    {"academic", "advisor", "scholarly", "mentor", "was advised by"},
}};

constexpr std::array<const char*, 20> kFirstNames = {
    "Arvo",  "Bel",  "Corin", "Dalla",   "Eskel", "Fenn",  "Galen",
    "Halvar", "Isko", "Jora", "Kestrel", "Lume",  "Marek", "Nyla",
    "Orsin", "Pell", "Quill", "Rusk",    "Sable", "Tamsin"};

constexpr std::array<const char*, 20> kLastNames = {
    "Aldmere",  "Brisk",   "Carrow",  "Dunmore",    "Eastlake",
    "Farrow",   "Greywater", "Holloway", "Ironside", "Jessup",
    "Kinsale",  "Larkin",  "Marlowe", "Northam",    "Oakhurst",
    "Pemberton", "Quarry", "Redfern", "Stroud",     "Thorne"};

class WorldBuilder {
 public:
  explicit WorldBuilder(uint64_t seed) : rng_(seed) {}

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Bernoulli(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }

  std::string Name() {
    return std::string(kFirstNames[Uniform(0, kFirstNames.size() - 1)]) + " " +
           kLastNames[Uniform(0, kLastNames.size() - 1)];
  }

  // A name not yet in `used`; records it.
  std::string FreshName(std::set<std::string>& used) {
    for (;;) {
      std::string name = Name();
      if (used.insert(name).second) return name;
    }
  }

  StructuredInput Graph(const std::vector<std::string>& predicates,
                        const std::string* first_subject = nullptr) {
    std::set<std::string> used;
    std::vector<Triple> triples;
    for (size_t i = 0; i < predicates.size(); ++i) {
      std::string subject;
      if (i == 0 && first_subject != nullptr) {
        subject = *first_subject;
        used.insert(subject);
      } else {
        subject = FreshName(used);
      }
      triples.emplace_back(subject, predicates[i], FreshName(used));
    }
    std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
      return std::tie(a.predicate(), a.subject(), a.object()) <
             std::tie(b.predicate(), b.subject(), b.object());
    });
    return StructuredInput(std::move(triples));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

TokenSeq GoldText(const SyntheticWorld& world, const StructuredInput& input) {
  std::string text;
  for (const Triple& t : input.triples()) {
    auto it = world.verb_phrase.find(t.predicate());
    if (it == world.verb_phrase.end()) {
      throw DataError("predicate '" + t.predicate() + "' is not in the world");
    }
    if (!text.empty()) text += ' ';
    text += t.subject() + " " + it->second + " " + t.object() + " .";
  }
  return TokenSeq::FromText(text);
}

SyntheticWorld BuildSyntheticWorld(const SyntheticWorldSpec& spec) {
  if (spec.labeled_predicates < 1 ||
      spec.labeled_predicates > static_cast<int>(kBase.size()) ||
      spec.unlabeled_only_predicates < 0 ||
      spec.unlabeled_only_predicates > 2 * spec.labeled_predicates ||
      spec.min_triples < 1 || spec.max_triples < spec.min_triples ||
      spec.labeled_pairs < 1) {
    throw ConfigError("invalid synthetic world specification");
  }
  SyntheticWorld world;
  world.labeled.name = "synthetic-labeled";
  world.unlabeled.name = "synthetic-unlabeled";
  world.test.name = "synthetic-test";

  std::map<std::string, std::vector<std::string>> lexicon;
  for (int k = 0; k < spec.labeled_predicates; ++k) {
    const BasePredicate& b = kBase[k];
    std::string predicate = std::string(b.first) + " " + b.second;
    world.labeled_predicates.push_back(predicate);
    world.verb_phrase[predicate] = b.verb;
    lexicon[b.first] = {b.first_synonym};
    lexicon[b.second] = {b.second_synonym};
  }
  // First-word variants of every base predicate, then second-word variants.
  for (int v = 0; v < spec.unlabeled_only_predicates; ++v) {
    const int k = v % spec.labeled_predicates;
    const BasePredicate& b = kBase[k];
    std::string variant = v < spec.labeled_predicates
                              ? std::string(b.first_synonym) + " " + b.second
                              : std::string(b.first) + " " + b.second_synonym;
    world.unlabeled_only_predicates.push_back(variant);
    world.verb_phrase[variant] = b.verb;
  }
  world.lexicon = SynonymLexicon(std::move(lexicon));

  WorldBuilder builder(spec.seed);
  const int n_base = spec.labeled_predicates;
  std::vector<std::string> all = world.labeled_predicates;
  all.insert(all.end(), world.unlabeled_only_predicates.begin(),
             world.unlabeled_only_predicates.end());

  std::vector<std::string> labeled_entities;
  for (int i = 0; i < spec.labeled_pairs; ++i) {
    std::vector<std::string> predicates;
    if (i < n_base) {
      predicates = {world.labeled_predicates[i]};
    } else {
      const int k = (i - n_base) % n_base;
      predicates = {world.labeled_predicates[k],
                    world.labeled_predicates[(k + 1) % n_base]};
    }
    StructuredInput input = builder.Graph(predicates);
    for (const Triple& t : input.triples()) {
      labeled_entities.push_back(t.subject());
      labeled_entities.push_back(t.object());
    }
    TokenSeq text = GoldText(world, input);
    world.labeled.examples.push_back(MakeLabeledExample(std::move(input), std::move(text)));
  }

  for (int i = 0; i < spec.unlabeled_graphs; ++i) {
    const int size = builder.Uniform(spec.min_triples, spec.max_triples);
    std::vector<std::string> predicates;
    for (int j = 0; j < size; ++j) {
      if (world.unlabeled_only_predicates.empty() ||
          builder.Bernoulli(spec.unlabeled_labeled_share)) {
        predicates.push_back(world.labeled_predicates[builder.Uniform(0, n_base - 1)]);
      } else {
        const int m = static_cast<int>(world.unlabeled_only_predicates.size());
        predicates.push_back(world.unlabeled_only_predicates[builder.Uniform(0, m - 1)]);
      }
    }
    // Anchor each graph on a labeled entity so the overlap filter keeps it.
    const std::string& anchor =
        labeled_entities[builder.Uniform(0, labeled_entities.size() - 1)];
    world.unlabeled.inputs.push_back(builder.Graph(predicates, &anchor));
  }

  for (int i = 0; i < spec.test_pairs; ++i) {
    const int size = builder.Uniform(spec.min_triples, spec.max_triples);
    std::vector<std::string> predicates;
    for (int j = 0; j < size; ++j) {
      predicates.push_back(all[builder.Uniform(0, all.size() - 1)]);
    }
    StructuredInput input = builder.Graph(predicates);
    TokenSeq text = GoldText(world, input);
    world.test.examples.push_back(MakeLabeledExample(std::move(input), std::move(text)));
  }
  return world;
}

}  // namespace cbst

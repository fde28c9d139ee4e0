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


// cbst_synth: writes the synthetic world (labeled, unlabeled and test sets,
// lexicon and a matching config) into a directory.
//
//   cbst_synth --out DIR [--seed N] [--overwrite]

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cbst/errors.h"
#include "cbst/pipeline.h"
#include "cbst/synthetic.h"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"Write the synthetic data-to-text world"};
  std::string out;
  cbst::SyntheticWorldSpec spec;
  bool overwrite = false;
  app.add_option("--out", out, "Output directory")->required();
  app.add_option("--seed", spec.seed, "World seed");
  app.add_option("--unlabeled", spec.unlabeled_graphs, "Unlabeled graphs")
      ->check(CLI::PositiveNumber);
  app.add_option("--test", spec.test_pairs, "Test pairs")->check(CLI::PositiveNumber);
  app.add_flag("--overwrite", overwrite, "Replace a non-empty directory");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    const cbst::SyntheticWorld world = cbst::BuildSyntheticWorld(spec);
    const fs::path dir(out);
    cbst::PrepareOutputDir(dir, overwrite);
    std::ostringstream labeled, unlabeled, test, lexicon;
    cbst::WriteLabeled(labeled, world.labeled);
    cbst::WriteUnlabeled(unlabeled, world.unlabeled);
    cbst::WriteLabeled(test, world.test);
    world.lexicon.Write(lexicon);
    cbst::WriteFile(dir / "labeled.jsonl", labeled.str());
    cbst::WriteFile(dir / "unlabeled.jsonl", unlabeled.str());
    cbst::WriteFile(dir / "test.jsonl", test.str());
    cbst::WriteFile(dir / "lexicon.tsv", lexicon.str());
    const std::string prefix = fs::absolute(dir).lexically_normal().string() + "/";
    cbst::WriteFile(dir / "cbst.conf",
                    "# Synthetic world; every other key keeps its default.\n"
                    "data.labeled=" + prefix + "labeled.jsonl\n"
                    "data.unlabeled=" + prefix + "unlabeled.jsonl\n"
                    "data.test=" + prefix + "test.jsonl\n"
                    "data.lexicon=" + prefix + "lexicon.tsv\n");
    std::cout << "labeled=" << world.labeled.examples.size()
              << "\nunlabeled=" << world.unlabeled.inputs.size()
              << "\ntest=" << world.test.examples.size() << "\n";
  } catch (const cbst::ConfigError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: data: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

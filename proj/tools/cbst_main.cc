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

// cbst: command-line driver.
//
//   cbst <subcommand> [--config FILE] [--out DIR] [--jobs N] [--overwrite]
//        [key=value ...]
//
// The config file defaults to $CBST_CONFIG. Exit status is 0 on success,
// 1 on data errors and 2 on usage or configuration errors; failures print one
// line "error: <kind>: <message>" to stderr.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbst/compare.h"
#include "cbst/config.h"
#include "cbst/curriculum.h"
#include "cbst/errors.h"
#include "cbst/eval.h"
#include "cbst/ingest.h"
#include "cbst/parallel.h"
#include "cbst/pipeline.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out;
  int jobs = 0;
  bool overwrite = false;
  std::string checkpoint;
  std::string input;
};

std::string OneLine(std::string message) {
  for (char& c : message) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return message;
}

int Fail(std::string_view kind, const std::string& message, int status) {
  std::cerr << "error: " << kind << ": " << OneLine(message) << "\n";
  return status;
}

cbst::PipelineConfig ResolveConfig(const Options& opts) {
  std::string path = opts.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("CBST_CONFIG")) path = env;
  }
  if (path.empty()) return cbst::ParseConfig("", opts.overrides);
  return cbst::LoadConfig(path, opts.overrides);
}

fs::path RequireOut(const Options& opts, const char* subcommand) {
  if (opts.out.empty()) {
    throw cbst::ConfigError(std::string(subcommand) + " needs --out");
  }
  return fs::path(opts.out);
}

std::string RequireInput(const std::string& flag, const std::string& fallback,
                         const char* what) {
  if (!flag.empty()) return flag;
  if (!fallback.empty()) return fallback;
  throw cbst::ConfigError(std::string("no ") + what +
                          " (pass --input or set it in the config)");
}

std::unique_ptr<cbst::Generator> LoadCheckpoint(const Options& opts) {
  if (opts.checkpoint.empty()) throw cbst::ConfigError("--checkpoint is required");
  return cbst::LoadGenerator(cbst::ReadFile(opts.checkpoint));
}

int Filter(const Options& opts) {
  const cbst::PipelineConfig cfg = ResolveConfig(opts);
  const fs::path out = RequireOut(opts, "filter");
  if (cfg.data.labeled.empty()) throw cbst::DataError("data.labeled is not set");
  if (cfg.data.unlabeled.empty()) throw cbst::DataError("data.unlabeled is not set");
  cbst::LabeledDataset labeled = cbst::ParseLabeled(fs::path(cfg.data.labeled));
  cbst::UnlabeledDataset pool = cbst::ParseUnlabeled(fs::path(cfg.data.unlabeled));
  cbst::UnlabeledDataset kept = cbst::FilterByEntityOverlap(pool, labeled);
  cbst::PrepareOutputDir(out, opts.overwrite);
  std::ostringstream body;
  cbst::WriteUnlabeled(body, kept);
  cbst::WriteFile(out / "filtered.jsonl", body.str());
  std::cout << "input=" << pool.inputs.size() << "\nkept=" << kept.inputs.size()
            << "\n";
  return 0;
}

int SegmentPool(const Options& opts) {
  cbst::PipelineConfig cfg = ResolveConfig(opts);
  const fs::path out = RequireOut(opts, "segment");
  if (cfg.data.unlabeled.empty()) throw cbst::DataError("data.unlabeled is not set");
  cbst::UnlabeledDataset pool = cbst::ParseUnlabeled(fs::path(cfg.data.unlabeled));
  // The split follows the curriculum settings whatever the mode.
  cfg.mode = cbst::PipelineMode::kCbst;
  const cbst::CurriculumPlan plan = cbst::EffectivePlan(cfg, pool);
  std::vector<cbst::UnlabeledDataset> subsets = cbst::Segment(pool, plan);

  cbst::PrepareOutputDir(out, opts.overwrite);
  std::string summary = "metric=" + std::string(cbst::MetricName(plan.metric())) + "\n";
  summary += "boundaries=";
  for (size_t i = 0; i < plan.boundaries().size(); ++i) {
    if (i > 0) summary += ",";
    summary += std::to_string(plan.boundaries()[i]);
  }
  summary += "\n";
  for (size_t k = 0; k < subsets.size(); ++k) {
    std::ostringstream body;
    cbst::WriteUnlabeled(body, subsets[k]);
    cbst::WriteFile(out / ("subset_" + std::to_string(k + 1) + ".jsonl"), body.str());
    summary += "subset_" + std::to_string(k + 1) + "=" +
               std::to_string(subsets[k].inputs.size()) + "\n";
  }
  cbst::WriteFile(out / "summary", summary);
  std::cout << summary;
  return 0;
}

void PrintRun(const cbst::RunResult& result) {
  if (result.initial_eval) {
    std::cout << cbst::FormatEvalReport(*result.initial_eval, "iter_0.eval.");
  }
  for (const cbst::IterationReport& report : result.reports) {
    std::istringstream lines(report.ToText());
    std::string line;
    while (std::getline(lines, line)) {
      std::cout << "iter_" << report.iteration << "." << line << "\n";
    }
  }
}

int Train(const Options& opts, bool finetune_only) {
  cbst::PipelineConfig cfg = ResolveConfig(opts);
  if (finetune_only) cfg.mode = cbst::PipelineMode::kFinetuneOnly;
  cbst::RunOptions run;
  run.output_dir = RequireOut(opts, finetune_only ? "finetune" : "selftrain");
  run.overwrite = opts.overwrite;
  run.jobs = opts.jobs;
  PrintRun(cbst::Run(cfg, run));
  return 0;
}

int Generate(const Options& opts) {
  const cbst::PipelineConfig cfg = ResolveConfig(opts);
  const fs::path out = RequireOut(opts, "generate");
  std::unique_ptr<cbst::Generator> model = LoadCheckpoint(opts);
  const std::string input =
      RequireInput(opts.input, cfg.data.unlabeled, "unlabeled input");
  cbst::UnlabeledDataset pool = cbst::ParseUnlabeled(fs::path(input));
  std::vector<cbst::PseudoLabeledExample> rows =
      cbst::GenerateCandidates(*model, pool, 1, opts.jobs);
  cbst::PrepareOutputDir(out, opts.overwrite);
  std::ostringstream body;
  cbst::WritePseudoLabeled(body, rows);
  cbst::WriteFile(out / "generated.jsonl", body.str());
  std::cout << "generated=" << rows.size() << "\n";
  return 0;
}

int EvaluateCheckpoint(const Options& opts) {
  const cbst::PipelineConfig cfg = ResolveConfig(opts);
  std::unique_ptr<cbst::Generator> model = LoadCheckpoint(opts);
  const std::string input = RequireInput(opts.input, cfg.data.test, "test set");
  cbst::LabeledDataset test = cbst::ParseLabeled(fs::path(input));
  std::cout << cbst::FormatEvalReport(cbst::Evaluate(*model, test, opts.jobs));
  return 0;
}

int Compare(const Options& opts) {
  const cbst::PipelineConfig cfg = ResolveConfig(opts);
  std::vector<cbst::PipelineConfig> configs = cbst::StandardModes(cfg);
  cbst::PipelineConfig loader = cfg;
  loader.mode = cbst::PipelineMode::kCbst;  // load the unlabeled pool too
  cbst::PipelineInputs inputs = cbst::LoadInputs(loader);
  cbst::RunOptions run;
  run.jobs = opts.jobs;
  run.overwrite = opts.overwrite;
  if (!opts.out.empty()) {
    run.output_dir = opts.out;
    cbst::PrepareOutputDir(run.output_dir, opts.overwrite);
  }
  std::vector<cbst::ComparisonRow> rows = cbst::CompareModes(configs, inputs, run);
  std::ostringstream table;
  cbst::WriteComparisonTable(table, rows);
  if (!opts.out.empty()) cbst::WriteFile(run.output_dir / "comparison.tsv", table.str());
  std::cout << table.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curriculum-based self-training for few-shot data-to-text"};
  app.require_subcommand(1, 1);
  Options opts;

  auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("--config", opts.config_path,
                    "Config file (default: $CBST_CONFIG)");
    sub->add_option("--jobs", opts.jobs, "Worker threads, 0 for all cores")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("overrides", opts.overrides, "key=value config overrides");
  };
  auto add_out = [&opts](CLI::App* sub) {
    sub->add_option("--out", opts.out, "Output directory");
    sub->add_flag("--overwrite", opts.overwrite,
                  "Replace the contents of a non-empty output directory");
  };

  CLI::App* filter = app.add_subcommand(
      "filter", "Keep unlabeled inputs sharing an entity with the labeled set");
  CLI::App* segment = app.add_subcommand(
      "segment", "Split the unlabeled pool into curriculum subsets");
  CLI::App* finetune =
      app.add_subcommand("finetune", "Train on the labeled pairs only");
  CLI::App* selftrain =
      app.add_subcommand("selftrain", "Run self-training in the configured mode");
  CLI::App* generate = app.add_subcommand(
      "generate", "Generate texts for unlabeled inputs from a checkpoint");
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Score a checkpoint on a labeled test set");
  CLI::App* compare = app.add_subcommand(
      "compare", "Run and evaluate the four modes on the same data");

  for (CLI::App* sub : {filter, segment, finetune, selftrain, generate, evaluate,
                        compare}) {
    add_common(sub);
  }
  for (CLI::App* sub : {filter, segment, finetune, selftrain, generate, compare}) {
    add_out(sub);
  }
  for (CLI::App* sub : {generate, evaluate}) {
    sub->add_option("--checkpoint", opts.checkpoint, "Model checkpoint");
    sub->add_option("--input", opts.input,
                    "Input file (default: data.unlabeled or data.test)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return Fail("usage", e.what(), kExitUsage);
  }

  try {
    if (*filter) return Filter(opts);
    if (*segment) return SegmentPool(opts);
    if (*finetune) return Train(opts, true);
    if (*selftrain) return Train(opts, false);
    if (*generate) return Generate(opts);
    if (*evaluate) return EvaluateCheckpoint(opts);
    if (*compare) return Compare(opts);
  } catch (const cbst::ConfigError& e) {
    return Fail(e.kind(), e.what(), kExitUsage);
  } catch (const cbst::Error& e) {
    return Fail(e.kind(), e.what(), kExitData);
  } catch (const std::exception& e) {
    return Fail("data", e.what(), kExitData);
  }
  return Fail("usage", "no subcommand", kExitUsage);
}

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

#include "cbst/pipeline.h"

#include <fstream>
#include <sstream>

#include "cbst/errors.h"
#include "cbst/format.h"
#include "cbst/parallel.h"
#include "cbst/template_model.h"

namespace fs = std::filesystem;

namespace cbst {
namespace {

std::vector<LabeledExample> ToPairs(
    const std::vector<PseudoLabeledExample>& pseudo) {
  std::vector<LabeledExample> pairs;
  pairs.reserve(pseudo.size());
  for (const PseudoLabeledExample& p : pseudo) {
    pairs.push_back(LabeledExample{p.input, p.text});
  }
  return pairs;
}

void Persist(const fs::path& dir, const std::string& name,
             const std::string& bytes) {
  fs::create_directories(dir);
  WriteFile(dir / name, bytes);
}

}  // namespace

PipelineInputs LoadInputs(const PipelineConfig& cfg) {
  if (cfg.data.labeled.empty()) throw DataError("data.labeled is not set");
  PipelineInputs inputs;
  inputs.labeled = ParseLabeled(fs::path(cfg.data.labeled));
  if (cfg.mode != PipelineMode::kFinetuneOnly || !cfg.data.unlabeled.empty()) {
    if (cfg.data.unlabeled.empty()) throw DataError("data.unlabeled is not set");
    inputs.unlabeled = ParseUnlabeled(fs::path(cfg.data.unlabeled));
  }
  if (!cfg.data.lexicon.empty()) {
    inputs.lexicon = SynonymLexicon::Load(cfg.data.lexicon);
  }
  if (!cfg.data.test.empty()) inputs.test = ParseLabeled(fs::path(cfg.data.test));
  return inputs;
}

std::string IterationReport::ToText() const {
  std::string out;
  out += "iteration=" + std::to_string(iteration) + "\n";
  out += "pool_size=" + std::to_string(pool_size) + "\n";
  out += "candidates=" + std::to_string(candidates) + "\n";
  out += "selected=" + std::to_string(selected) + "\n";
  out += "mean_coverage=" + FormatDouble(mean_coverage) + "\n";
  out += "mean_logprob=" + FormatDouble(mean_logprob) + "\n";
  if (eval) out += FormatEvalReport(*eval, "eval.");
  return out;
}

std::unique_ptr<Generator> MakeBaseModel(const GeneratorConfig& cfg) {
  if (cfg.kind != TemplateModel::kKind) {
    throw ConfigError("unknown generator.kind '" + cfg.kind + "'");
  }
  return std::make_unique<TemplateModel>(cfg.alpha, cfg.unseen_nll);
}

CurriculumPlan EffectivePlan(const PipelineConfig& cfg,
                             const UnlabeledDataset& pool) {
  const CurriculumConfig& c = cfg.curriculum;
  if (cfg.mode == PipelineMode::kStNoise || cfg.mode == PipelineMode::kStVanilla) {
    return CurriculumPlan(c.metric, {});
  }
  if (c.boundaries) return CurriculumPlan(c.metric, *c.boundaries);
  if (c.metric == DifficultyMetric::kTripleCount && c.m_c == 3) {
    return CurriculumPlan::Default();
  }
  return CurriculumPlan::FromQuantiles(c.metric, c.m_c, pool);
}

NoiseConfig EffectiveNoise(const PipelineConfig& cfg, int iteration) {
  NoiseConfig noise = cfg.noise;
  if (cfg.mode == PipelineMode::kStVanilla) {
    noise.p_word = 0.0;
    noise.p_triple = 0.0;
  }
  noise.seed = cfg.seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(iteration);
  return noise;
}

std::unique_ptr<Generator> InitTeacher(const Generator& base,
                                       const LabeledDataset& labeled,
                                       int epochs) {
  if (labeled.examples.empty()) {
    throw DataError("teacher initialization needs a non-empty labeled set");
  }
  return base.Train(labeled.examples, epochs);
}

std::vector<PseudoLabeledExample> GenerateCandidates(
    const Generator& teacher, const UnlabeledDataset& pool, int iteration,
    int jobs) {
  std::vector<std::optional<PseudoLabeledExample>> slots(pool.inputs.size());
  ParallelFor(pool.inputs.size(), jobs, [&](size_t i) {
    const StructuredInput& input = pool.inputs[i];
    try {
      GenerationResult gen = teacher.Generate(input);
      if (gen.text.empty()) throw DataError("generator produced an empty text");
      double coverage = Coverage(input, gen.text);
      slots[i] = PseudoLabeledExample{input, std::move(gen.text), gen.logprob,
                                      coverage, iteration};
    } catch (const std::exception& e) {
      throw DataError("generation failed for " + pool.name + " sample " +
                      std::to_string(i) + ": " + e.what());
    }
  });
  std::vector<PseudoLabeledExample> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

std::unique_ptr<Generator> TrainStudent(
    const Generator& base, const std::vector<PseudoLabeledExample>& pseudo,
    const LabeledDataset& labeled, const SynonymLexicon& lexicon,
    const NoiseConfig& noise, int epochs) {
  if (labeled.examples.empty()) {
    throw DataError("student training needs a non-empty labeled set");
  }
  noise.Validate();
  std::unique_ptr<Generator> student = base.Clone();
  if (!pseudo.empty()) {
    InputNoise perturb;
    if (!noise.IsIdentity()) {
      perturb = [&lexicon, noise](const StructuredInput& input, uint64_t index) {
        return ApplyNoise(input, lexicon, noise, index);
      };
    }
    student = student->Train(ToPairs(pseudo), epochs, perturb);
  }
  return student->Train(labeled.examples, epochs);
}

RunResult Run(const PipelineConfig& cfg, const PipelineInputs& inputs,
              const RunOptions& options) {
  cfg.Validate();
  const bool persist = !options.output_dir.empty();
  const fs::path& out = options.output_dir;
  if (persist) {
    PrepareOutputDir(out, options.overwrite);
    WriteFile(out / "run_config", cfg.ToText());
  }

  std::unique_ptr<Generator> base = MakeBaseModel(cfg.generator);
  std::unique_ptr<Generator> teacher =
      InitTeacher(*base, inputs.labeled, cfg.epochs_teacher_init);

  RunResult result;
  if (inputs.test) result.initial_eval = Evaluate(*teacher, *inputs.test, options.jobs);

  if (cfg.mode != PipelineMode::kFinetuneOnly) {
    const CurriculumPlan plan = EffectivePlan(cfg, inputs.unlabeled);
    const std::vector<UnlabeledDataset> subsets = Segment(inputs.unlabeled, plan);
    for (int t = 1; t <= plan.m_c(); ++t) {
      const UnlabeledDataset pool = Cumulative(subsets, t);
      std::vector<PseudoLabeledExample> candidates =
          GenerateCandidates(*teacher, pool, t, options.jobs);
      std::vector<PseudoLabeledExample> selected =
          Select(candidates, cfg.selection);
      std::unique_ptr<Generator> student =
          TrainStudent(*base, selected, inputs.labeled, inputs.lexicon,
                       EffectiveNoise(cfg, t), cfg.epochs_student);

      IterationReport report;
      report.iteration = t;
      report.pool_size = pool.inputs.size();
      report.candidates = candidates.size();
      report.selected = selected.size();
      if (!candidates.empty()) {
        for (const PseudoLabeledExample& c : candidates) {
          report.mean_coverage += c.coverage;
          report.mean_logprob += c.logprob;
        }
        report.mean_coverage /= static_cast<double>(candidates.size());
        report.mean_logprob /= static_cast<double>(candidates.size());
      }
      if (inputs.test) report.eval = Evaluate(*student, *inputs.test, options.jobs);

      if (persist) {
        const fs::path dir = out / ("iter_" + std::to_string(t));
        Persist(dir, "teacher.ckpt", teacher->Save());
        std::ostringstream dump;
        WritePseudoLabeled(dump, selected);
        Persist(dir, "pseudo.jsonl", dump.str());
        Persist(dir, "report", report.ToText());
      }
      result.reports.push_back(std::move(report));
      teacher = std::move(student);
    }
  }

  if (persist) Persist(out / "final", "model.ckpt", teacher->Save());
  result.final_model = std::move(teacher);
  return result;
}

RunResult Run(const PipelineConfig& cfg, const RunOptions& options) {
  cfg.Validate();
  return Run(cfg, LoadInputs(cfg), options);
}

void PrepareOutputDir(const fs::path& dir, bool overwrite) {
  if (fs::exists(dir)) {
    if (!fs::is_directory(dir)) {
      throw DataError("output path " + dir.string() + " is not a directory");
    }
    if (!fs::is_empty(dir)) {
      if (!overwrite) {
        throw DataError("output directory " + dir.string() +
                        " is not empty (pass --overwrite to replace it)");
      }
      for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
        fs::remove_all(entry.path());
      }
    }
  }
  fs::create_directories(dir);
}

void WriteFile(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << bytes;
  if (!out) throw DataError("failed writing " + path.string());
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace cbst

/* Copyright 2026 The lexsent Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef LEXSENT_CORE_PIPELINE_HPP_
#define LEXSENT_CORE_PIPELINE_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/config.hpp"
#include "core/corpus.hpp"
#include "core/explain.hpp"
#include "core/model_io.hpp"

namespace lexsent {

enum class OutputFormat { kCsv, kJson };

// Split, fit vocabulary and idf on the training part only, train, and
// evaluate on all three parts.
struct TrainedPipeline {
  ModelBundle bundle;
  SplitMetrics metrics;
  CorpusSplit split;
  std::vector<ScatterPoint> test_scatter;
};

TrainedPipeline train_pipeline(const PipelineConfig& config,
                               std::span<const LabeledDocument> corpus);

std::vector<LabeledExample> featurize(std::span<const LabeledDocument> docs,
                                      const Vocabulary& vocab,
                                      const IdfWeights& idf);

struct TrainPaths {
  std::filesystem::path corpus_dir;
  std::filesystem::path labels;  // empty: <corpus_dir>/labels.csv
  std::filesystem::path model_out;
};

struct TrainOutputs {
  std::filesystem::path model;
  std::filesystem::path metrics;
  std::filesystem::path manifest;
  std::filesystem::path scatter;
};

// <model stem>.metrics.json and friends, next to the model file.
TrainOutputs output_paths(const std::filesystem::path& model_out,
                          OutputFormat scatter_format);

struct TrainRunResult {
  TrainOutputs outputs;
  SplitMetrics metrics;
  std::string metrics_json;
  std::size_t vocabulary_size = 0;
  std::size_t nonzero_weights = 0;
  int epochs_run = 0;
  bool stopped_early = false;
};

// The train command: reads the corpus directory, trains, and writes the
// model, metrics, manifest and test-set scatter files.
TrainRunResult run_training(const PipelineConfig& config,
                            const TrainPaths& paths,
                            OutputFormat scatter_format);

// "23 months (1 year 11 months)"; rounds to the nearest whole month.
std::string render_months(double months);

// Negative, or beyond the 0 to 14.5 year range seen in assault sentencing.
bool outside_observed_range(double months);

// A loaded model ready to score raw decision text.
class Predictor {
 public:
  explicit Predictor(ModelBundle bundle, std::string model_hash = {});

  static Predictor from_file(const std::filesystem::path& path);

  struct Explained {
    std::string cleaned_text;
    DocumentExplanation explanation;
    bool out_of_range = false;
    bool oov = false;  // no in-vocabulary features
  };

  double predict(std::string_view raw_text) const;
  Explained explain(std::string_view raw_text, std::size_t k) const;
  GlobalRanking ranking(std::size_t k) const;

  const ModelBundle& bundle() const { return bundle_; }
  const std::string& model_hash() const { return model_hash_; }

 private:
  ModelBundle bundle_;
  std::string model_hash_;
};

}  // namespace lexsent

#endif  // LEXSENT_CORE_PIPELINE_HPP_

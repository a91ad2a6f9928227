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

#include "core/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "core/error.hpp"
#include "core/hash.hpp"

namespace lexsent {

using nlohmann::json;

std::vector<LabeledExample> featurize(std::span<const LabeledDocument> docs,
                                      const Vocabulary& vocab,
                                      const IdfWeights& idf) {
  std::vector<LabeledExample> out;
  out.reserve(docs.size());
  for (const auto& d : docs) {
    out.push_back({d.id, Example{transform_tfidf(d.cleaned_text, vocab, idf),
                                 d.sentence_months}});
  }
  return out;
}

namespace {

std::vector<Example> examples_of(const std::vector<LabeledExample>& data) {
  std::vector<Example> out;
  out.reserve(data.size());
  for (const auto& d : data) out.push_back(d.example);
  return out;
}

}  // namespace

TrainedPipeline train_pipeline(const PipelineConfig& config,
                               std::span<const LabeledDocument> corpus) {
  validate(config);
  TrainedPipeline out;
  out.split = split_corpus(corpus, config.split);

  std::vector<std::string> train_texts;
  train_texts.reserve(out.split.train.size());
  for (const auto& d : out.split.train) train_texts.push_back(d.cleaned_text);

  auto& b = out.bundle;
  b.cleaning = config.cleaning;
  b.features = config.features;
  b.vocab = fit_vocabulary(train_texts, config.features);
  b.idf = fit_idf(b.vocab);

  const auto train_set = featurize(out.split.train, b.vocab, b.idf);
  const auto val_set = featurize(out.split.val, b.vocab, b.idf);
  const auto test_set = featurize(out.split.test, b.vocab, b.idf);
  const auto train_examples = examples_of(train_set);
  const auto val_examples = examples_of(val_set);
  const auto test_examples = examples_of(test_set);

  b.model = train(train_examples, val_examples, b.vocab.size(), config.train);
  out.metrics = {evaluate(b.model, train_examples),
                 evaluate(b.model, val_examples),
                 evaluate(b.model, test_examples)};
  b.metrics = out.metrics;
  out.test_scatter = scatter_data(b.model, test_set);
  return out;
}

TrainOutputs output_paths(const std::filesystem::path& model_out,
                          OutputFormat scatter_format) {
  auto stem = model_out;
  if (stem.extension() == ".json") stem.replace_extension();
  const auto with = [&](const char* suffix) {
    auto p = stem;
    p += suffix;
    return p;
  };
  return {model_out, with(".metrics.json"), with(".manifest.json"),
          with(scatter_format == OutputFormat::kJson ? ".scatter.json"
                                                     : ".scatter.csv")};
}

TrainRunResult run_training(const PipelineConfig& config,
                            const TrainPaths& paths,
                            OutputFormat scatter_format) {
  using Clock = std::chrono::steady_clock;
  const auto seconds_since = [](Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };
  const auto t_start = Clock::now();

  const auto labels_path =
      paths.labels.empty() ? paths.corpus_dir / "labels.csv" : paths.labels;
  const auto raw = read_corpus_directory(paths.corpus_dir);
  const auto labels = read_labels_csv(labels_path);
  const auto corpus = load_corpus(raw, labels, config.cleaning);
  const double t_load = seconds_since(t_start);

  const auto t_train0 = Clock::now();
  auto trained = train_pipeline(config, corpus);
  const double t_train = seconds_since(t_train0);
  const auto& b = trained.bundle;

  TrainRunResult result;
  result.outputs = output_paths(paths.model_out, scatter_format);
  result.metrics = trained.metrics;
  result.vocabulary_size = b.vocab.size();
  result.nonzero_weights = count_nonzero(b.model);
  result.epochs_run = b.model.epochs_run;
  result.stopped_early = b.model.stopped_early;

  const json metrics{{"train", to_json(trained.metrics.train)},
                     {"val", to_json(trained.metrics.val)},
                     {"test", to_json(trained.metrics.test)},
                     {"epochs_run", b.model.epochs_run},
                     {"stopped_early", b.model.stopped_early},
                     {"vocabulary_size", b.vocab.size()},
                     {"nonzero_weights", result.nonzero_weights}};
  result.metrics_json = metrics.dump(2) + "\n";

  if (const auto parent = paths.model_out.parent_path(); !parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
    if (ec) throw DataError("cannot create " + parent.string());
  }
  const auto model_text = serialize_model(b);
  write_file_atomic(result.outputs.model, model_text);
  write_file_atomic(result.outputs.metrics, result.metrics_json);
  write_file_atomic(result.outputs.scatter,
                    scatter_format == OutputFormat::kJson
                        ? scatter_json(trained.test_scatter)
                        : scatter_csv(trained.test_scatter));

  const json manifest{
      {"command", "train"},
      {"config", to_json(config)},
      {"seed", config.split.seed},
      {"inputs",
       {{"corpus_dir", paths.corpus_dir.string()},
        {"labels", labels_path.string()},
        {"documents", corpus.size()}}},
      {"split_sizes",
       {{"train", trained.split.train.size()},
        {"val", trained.split.val.size()},
        {"test", trained.split.test.size()}}},
      {"outputs",
       {{"model", result.outputs.model.string()},
        {"model_hash", fingerprint(model_text)},
        {"metrics", result.outputs.metrics.string()},
        {"scatter", result.outputs.scatter.string()}}},
      {"timings_seconds",
       {{"load", t_load}, {"train", t_train}, {"total", seconds_since(t_start)}}},
      {"metrics", metrics}};
  write_file_atomic(result.outputs.manifest, manifest.dump(2) + "\n");
  return result;
}

std::string render_months(double months) {
  const long long m = std::llround(months);
  const auto plural = [](long long v, const char* unit) {
    return std::to_string(v) + " " + unit + (v == 1 ? "" : "s");
  };
  if (m < 0) return plural(m, "month") + " (negative prediction)";
  return plural(m, "month") + " (" + plural(m / 12, "year") + " " +
         plural(m % 12, "month") + ")";
}

bool outside_observed_range(double months) {
  return months < 0.0 || months > kAssaultMaxMonths;
}

Predictor::Predictor(ModelBundle bundle, std::string model_hash)
    : bundle_(std::move(bundle)), model_hash_(std::move(model_hash)) {
  if (model_hash_.empty()) model_hash_ = fingerprint(serialize_model(bundle_));
}

Predictor Predictor::from_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  return Predictor(parse_model(text), fingerprint(text));
}

double Predictor::predict(std::string_view raw_text) const {
  const auto cleaned = clean_text(raw_text, bundle_.cleaning);
  return lexsent::predict(bundle_.model,
                          transform_tfidf(cleaned, bundle_.vocab, bundle_.idf));
}

Predictor::Explained Predictor::explain(std::string_view raw_text,
                                        std::size_t k) const {
  Explained out;
  out.cleaned_text = clean_text(raw_text, bundle_.cleaning);
  out.explanation = explain_document(bundle_.model, out.cleaned_text,
                                     bundle_.vocab, bundle_.idf, k);
  out.out_of_range = outside_observed_range(out.explanation.prediction);
  out.oov = out.explanation.feature_count == 0;
  return out;
}

GlobalRanking Predictor::ranking(std::size_t k) const {
  return global_ranking(bundle_.model, bundle_.vocab, bundle_.idf, k);
}

}  // namespace lexsent

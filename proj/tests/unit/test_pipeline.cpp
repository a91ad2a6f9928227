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

#include <cmath>

#include "core/error.hpp"
#include "core/hash.hpp"
#include "core/synth.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support/scratch.hpp"

using namespace lexsent;
using nlohmann::json;

namespace {

std::vector<LabeledDocument> synthetic_corpus(std::size_t n_docs) {
  SynthParams p;
  p.n_docs = n_docs;
  const auto s = generate_synthetic_corpus(p);
  std::map<std::string, double> labels;
  for (std::size_t i = 0; i < s.documents.size(); ++i) {
    labels[s.documents[i].id] = s.labels[i];
  }
  return load_corpus(s.documents, labels, default_cleaning_config());
}

std::filesystem::path synthetic_dir(const std::string& name) {
  const auto dir = scratch::dir(name);
  write_synthetic_corpus(generate_synthetic_corpus(SynthParams{}),
                         dir / "corpus");
  return dir;
}

}  // namespace

TEST_CASE("render_months") {
  CHECK(render_months(23.0) == "23 months (1 year 11 months)");
  CHECK(render_months(22.6) == "23 months (1 year 11 months)");
  CHECK(render_months(12.0) == "12 months (1 year 0 months)");
  CHECK(render_months(1.0) == "1 month (0 years 1 month)");
  CHECK(render_months(0.2) == "0 months (0 years 0 months)");
  CHECK(render_months(174.0) == "174 months (14 years 6 months)");
  CHECK(render_months(-3.0) == "-3 months (negative prediction)");
}

TEST_CASE("outside_observed_range") {
  CHECK(outside_observed_range(-0.01));
  CHECK_FALSE(outside_observed_range(0.0));
  CHECK_FALSE(outside_observed_range(174.0));
  CHECK(outside_observed_range(174.5));
}

TEST_CASE("train_pipeline fits features on the training part only") {
  const auto corpus = synthetic_corpus(300);
  const auto t = train_pipeline(PipelineConfig{}, corpus);
  CHECK(t.split.train.size() == 195);
  CHECK(t.split.val.size() == 30);
  CHECK(t.split.test.size() == 75);
  CHECK(t.bundle.vocab.n_docs() == t.split.train.size());
  CHECK(t.bundle.vocab.size() == 30);
  CHECK(t.metrics.train.n == 195);
  CHECK(t.metrics.test.n == 75);
  CHECK(t.metrics.test.r_squared >= 0.9);
  CHECK(t.test_scatter.size() == 75);
  REQUIRE(t.bundle.metrics);
  CHECK(t.bundle.metrics->test.mae == t.metrics.test.mae);
}

TEST_CASE("featurize keeps ids and labels") {
  const auto corpus = synthetic_corpus(20);
  std::vector<std::string> texts;
  for (const auto& d : corpus) texts.push_back(d.cleaned_text);
  VocabularyOptions opts;
  opts.min_df = 1;
  const auto vocab = fit_vocabulary(texts, opts);
  const auto idf = fit_idf(vocab);
  const auto f = featurize(corpus, vocab, idf);
  REQUIRE(f.size() == corpus.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f[i].id == corpus[i].id);
    CHECK(f[i].example.months == corpus[i].sentence_months);
    CHECK(f[i].example.x.dimension() == vocab.size());
  }
}

TEST_CASE("output paths sit next to the model") {
  const auto o = output_paths("out/model.json", OutputFormat::kCsv);
  CHECK(o.model == "out/model.json");
  CHECK(o.metrics == "out/model.metrics.json");
  CHECK(o.manifest == "out/model.manifest.json");
  CHECK(o.scatter == "out/model.scatter.csv");
  CHECK(output_paths("m", OutputFormat::kJson).scatter == "m.scatter.json");
}

TEST_CASE("run_training writes every artifact") {
  const auto dir = synthetic_dir("pipeline_run");
  const auto r = run_training(PipelineConfig{},
                              {dir / "corpus", {}, dir / "out" / "model.json"},
                              OutputFormat::kCsv);
  for (const auto& p : {r.outputs.model, r.outputs.metrics, r.outputs.manifest,
                        r.outputs.scatter}) {
    CHECK(std::filesystem::exists(p));
  }
  const auto metrics = json::parse(scratch::read(r.outputs.metrics));
  for (const char* part : {"train", "val", "test"}) {
    CHECK(metrics.at(part).contains("mae"));
    CHECK(metrics.at(part).contains("r_squared"));
  }
  CHECK(metrics.at("vocabulary_size") == 30);
  const auto manifest = json::parse(scratch::read(r.outputs.manifest));
  CHECK(manifest.at("split_sizes").at("train") == 195);
  CHECK(manifest.at("outputs").at("model_hash") ==
        fingerprint(scratch::read(r.outputs.model)));
  CHECK(manifest.at("config").at("train").at("alpha") == 0.001);
  CHECK(manifest.at("timings_seconds").contains("total"));
  const auto scatter = scratch::read(r.outputs.scatter);
  CHECK(scatter.rfind("id,truth_months,predicted_months\n", 0) == 0);
  CHECK(std::count(scatter.begin(), scatter.end(), '\n') == 76);
}

TEST_CASE("run_training is byte-for-byte repeatable") {
  const auto dir = synthetic_dir("pipeline_repeat");
  const auto a = run_training(PipelineConfig{},
                              {dir / "corpus", {}, dir / "a" / "model.json"},
                              OutputFormat::kJson);
  const auto b = run_training(PipelineConfig{},
                              {dir / "corpus", {}, dir / "b" / "model.json"},
                              OutputFormat::kJson);
  CHECK(scratch::read(a.outputs.model) == scratch::read(b.outputs.model));
  CHECK(scratch::read(a.outputs.metrics) == scratch::read(b.outputs.metrics));
  CHECK(scratch::read(a.outputs.scatter) == scratch::read(b.outputs.scatter));

  PipelineConfig other;
  apply_setting(other, "seed", "5");
  const auto c = run_training(other,
                              {dir / "corpus", {}, dir / "c" / "model.json"},
                              OutputFormat::kJson);
  CHECK(scratch::read(a.outputs.model) != scratch::read(c.outputs.model));
}

TEST_CASE("run_training failures leave no model behind") {
  const auto dir = synthetic_dir("pipeline_fail");
  std::filesystem::remove(dir / "corpus" / "labels.csv");
  const auto model = dir / "out" / "model.json";
  CHECK_THROWS_WITH_AS(
      run_training(PipelineConfig{}, {dir / "corpus", {}, model},
                   OutputFormat::kCsv),
      doctest::Contains("labels.csv"), DataError);
  CHECK_FALSE(std::filesystem::exists(model));

  PipelineConfig diverge;
  apply_setting(diverge, "eta0", "1000");
  apply_setting(diverge, "power_t", "0");
  apply_setting(diverge, "alpha", "0");
  const auto dir2 = synthetic_dir("pipeline_diverge");
  CHECK_THROWS_AS(run_training(diverge, {dir2 / "corpus", {}, model},
                               OutputFormat::kCsv),
                  TrainingError);
  CHECK_FALSE(std::filesystem::exists(model));
}

TEST_CASE("Predictor") {
  const auto dir = synthetic_dir("pipeline_predictor");
  const auto r = run_training(PipelineConfig{},
                              {dir / "corpus", {}, dir / "model.json"},
                              OutputFormat::kCsv);
  const auto p = Predictor::from_file(r.outputs.model);
  CHECK(p.model_hash() == fingerprint(scratch::read(r.outputs.model)));

  const auto text = scratch::read(dir / "corpus" / "case_0001.txt");
  REQUIRE_FALSE(text.empty());
  const auto e = p.explain(text, 0);
  CHECK(e.explanation.feature_count > 0);
  CHECK(p.predict(text) == e.explanation.prediction);
  CHECK(std::abs(e.explanation.intercept + e.explanation.contribution_total -
                 e.explanation.prediction) <= 1e-9);
  CHECK(e.cleaned_text.find("detention") == std::string::npos);

  const auto oov = p.explain("Nothing here matches.", 5);
  CHECK(oov.oov);
  CHECK(oov.explanation.prediction == p.bundle().model.intercept);
  CHECK_FALSE(oov.out_of_range);

  const auto ranking = p.ranking(3);
  CHECK(ranking.top_positive.size() <= 3);
  CHECK(ranking.top_negative.size() <= 3);

  const Predictor in_memory(p.bundle());
  CHECK(in_memory.model_hash() == p.model_hash());
}

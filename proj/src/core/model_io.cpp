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

#include "core/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "core/config.hpp"
#include "core/error.hpp"

namespace lexsent {

using nlohmann::json;

json to_json(const EvalMetrics& m) {
  json j{{"mae", m.mae}, {"n", m.n}};
  if (std::isfinite(m.r_squared)) {
    j["r_squared"] = m.r_squared;
  } else {
    j["r_squared"] = "undefined";
  }
  return j;
}

EvalMetrics metrics_from_json(const json& j) {
  EvalMetrics m;
  m.mae = j.at("mae").get<double>();
  m.n = j.at("n").get<std::size_t>();
  const auto& r2 = j.at("r_squared");
  m.r_squared = r2.is_string() ? kUndefinedRSquared : r2.get<double>();
  return m;
}

std::string serialize_model(const ModelBundle& b) {
  json cleaning{
      {"stop_words", b.cleaning.stop_words},
      {"stop_words_hash", stop_words_fingerprint(b.cleaning.stop_words)},
      {"leakage_phrases", b.cleaning.leakage_phrases},
      {"assault_domain", b.cleaning.assault_domain}};
  json features{{"n_min", b.vocab.n_min()},
                {"n_max", b.vocab.n_max()},
                {"min_df", b.features.min_df},
                {"max_df_ratio", b.features.max_df_ratio},
                {"n_docs", b.vocab.n_docs()},
                {"terms", b.vocab.terms()},
                {"doc_freq", b.vocab.doc_freqs()},
                {"idf", b.idf.values}};
  json model{{"weights", b.model.weights}, {"intercept", b.model.intercept}};
  json training{{"epochs_run", b.model.epochs_run},
                {"stopped_early", b.model.stopped_early}};
  if (b.metrics) {
    training["metrics"] = {{"train", to_json(b.metrics->train)},
                           {"val", to_json(b.metrics->val)},
                           {"test", to_json(b.metrics->test)}};
  }
  json doc{{"format_version", kModelFormatVersion},
           {"cleaning", cleaning},
           {"features", features},
           {"model", model},
           {"train_config", to_json(b.model.config)},
           {"training", training}};
  return doc.dump(1) + "\n";
}

ModelBundle parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    const int version = doc.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw DataError("unsupported model format_version " +
                      std::to_string(version));
    }
    ModelBundle b;
    const auto& cl = doc.at("cleaning");
    b.cleaning.stop_words = cl.at("stop_words").get<std::set<std::string>>();
    b.cleaning.leakage_phrases =
        cl.at("leakage_phrases").get<std::vector<std::string>>();
    b.cleaning.assault_domain = cl.at("assault_domain").get<bool>();
    if (cl.at("stop_words_hash").get<std::string>() !=
        stop_words_fingerprint(b.cleaning.stop_words)) {
      throw DataError("model stop-word list does not match its hash");
    }

    const auto& f = doc.at("features");
    b.features.n_min = f.at("n_min").get<int>();
    b.features.n_max = f.at("n_max").get<int>();
    b.features.min_df = f.at("min_df").get<int>();
    b.features.max_df_ratio = f.at("max_df_ratio").get<double>();
    b.vocab = Vocabulary::from_parts(
        f.at("terms").get<std::vector<std::string>>(),
        f.at("doc_freq").get<std::vector<int>>(),
        f.at("n_docs").get<std::size_t>(), b.features.n_min, b.features.n_max);
    b.idf.values = f.at("idf").get<std::vector<double>>();

    const auto& m = doc.at("model");
    b.model.weights = m.at("weights").get<std::vector<double>>();
    b.model.intercept = m.at("intercept").get<double>();
    b.model.config = train_config_from_json(doc.at("train_config"));
    const auto& t = doc.at("training");
    b.model.epochs_run = t.at("epochs_run").get<int>();
    b.model.stopped_early = t.at("stopped_early").get<bool>();
    if (t.contains("metrics")) {
      const auto& mt = t.at("metrics");
      b.metrics = SplitMetrics{metrics_from_json(mt.at("train")),
                               metrics_from_json(mt.at("val")),
                               metrics_from_json(mt.at("test"))};
    }

    if (b.idf.values.size() != b.vocab.size() ||
        b.model.weights.size() != b.vocab.size()) {
      throw DataError("model file: weights/idf/terms lengths disagree");
    }
    return b;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed model file: ") + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw DataError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw DataError("cannot move model into place at " + path.string());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelBundle read_model_file(const std::filesystem::path& path) {
  return parse_model(read_text_file(path));
}

}  // namespace lexsent

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

#ifndef LEXSENT_CORE_MODEL_IO_HPP_
#define LEXSENT_CORE_MODEL_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "core/corpus.hpp"
#include "core/ngram_features.hpp"
#include "core/sgd_regressor.hpp"
#include "json.hpp"

namespace lexsent {

inline constexpr int kModelFormatVersion = 1;

struct SplitMetrics {
  EvalMetrics train;
  EvalMetrics val;
  EvalMetrics test;
};

// Everything needed to go from raw decision text to a prediction.
struct ModelBundle {
  CleaningConfig cleaning;
  VocabularyOptions features;
  Vocabulary vocab;
  IdfWeights idf;
  LinearModel model;
  std::optional<SplitMetrics> metrics;
};

// JSON with sorted keys and shortest round-trip number formatting, so equal
// bundles serialize to identical bytes.
std::string serialize_model(const ModelBundle& bundle);
ModelBundle parse_model(std::string_view text);

// Writes through a temporary file and renames, so a failed write never
// leaves a partial model behind.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

ModelBundle read_model_file(const std::filesystem::path& path);

nlohmann::json to_json(const EvalMetrics& m);
EvalMetrics metrics_from_json(const nlohmann::json& j);

}  // namespace lexsent

#endif  // LEXSENT_CORE_MODEL_IO_HPP_

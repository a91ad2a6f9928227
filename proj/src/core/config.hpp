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

#ifndef LEXSENT_CORE_CONFIG_HPP_
#define LEXSENT_CORE_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "core/corpus.hpp"
#include "core/ngram_features.hpp"
#include "core/sgd_regressor.hpp"
#include "json.hpp"

namespace lexsent {

// Everything a training run needs besides its input and output paths.
struct PipelineConfig {
  CleaningConfig cleaning = default_cleaning_config();
  std::string stop_words_file;  // empty: built-in list
  VocabularyOptions features;
  SplitSpec split;
  TrainConfig train;
};

// Config files are "key = value" lines; '#' starts a comment. Recognised
// keys:
//
//   seed                  split shuffle and SGD order (both)
//   epsilon alpha max_epochs eta0 power_t early_stop_patience early_stop_tol
//   train_fraction val_fraction test_fraction
//   min_df max_df_ratio n_min n_max
//   stop_words_file       one token per line; replaces the built-in list
//   leakage_phrases       comma-separated phrases
//   assault_domain        true/false; caps labels at 174 months
//
// base_dir resolves a relative stop_words_file.
void apply_setting(PipelineConfig& config, std::string_view key,
                   std::string_view value,
                   const std::filesystem::path& base_dir = {});

void apply_config_text(PipelineConfig& config, std::string_view text,
                       const std::filesystem::path& base_dir = {});

void load_config_file(PipelineConfig& config,
                      const std::filesystem::path& path);

void validate(const PipelineConfig& config);

nlohmann::json to_json(const TrainConfig& c);
TrainConfig train_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PipelineConfig& c);

}  // namespace lexsent

#endif  // LEXSENT_CORE_CONFIG_HPP_

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

#include "core/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace lexsent {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view key, std::string_view value) {
  const std::string v(value);
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(d)) {
    throw UsageError("config '" + std::string(key) + "': expected a number, got '" +
                     v + "'");
  }
  return d;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value) {
  Int out{};
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (value.empty() || res.ec != std::errc{} || res.ptr != last) {
    throw UsageError("config '" + std::string(key) +
                     "': expected an integer, got '" + std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw UsageError("config '" + std::string(key) +
                   "': expected true or false, got '" + std::string(value) + "'");
}

}  // namespace

void apply_setting(PipelineConfig& c, std::string_view key,
                   std::string_view value,
                   const std::filesystem::path& base_dir) {
  key = trim(key);
  value = trim(value);
  if (key == "seed") {
    const auto seed = parse_int<std::uint64_t>(key, value);
    c.split.seed = seed;
    c.train.seed = seed;
  } else if (key == "epsilon") {
    c.train.epsilon = parse_real(key, value);
  } else if (key == "alpha") {
    c.train.alpha = parse_real(key, value);
  } else if (key == "max_epochs") {
    c.train.max_epochs = parse_int<int>(key, value);
  } else if (key == "eta0") {
    c.train.eta0 = parse_real(key, value);
  } else if (key == "power_t") {
    c.train.power_t = parse_real(key, value);
  } else if (key == "early_stop_patience") {
    c.train.early_stop_patience = parse_int<int>(key, value);
  } else if (key == "early_stop_tol") {
    c.train.early_stop_tol = parse_real(key, value);
  } else if (key == "train_fraction") {
    c.split.train_fraction = parse_real(key, value);
  } else if (key == "val_fraction") {
    c.split.val_fraction = parse_real(key, value);
  } else if (key == "test_fraction") {
    c.split.test_fraction = parse_real(key, value);
  } else if (key == "min_df") {
    c.features.min_df = parse_int<int>(key, value);
  } else if (key == "max_df_ratio") {
    c.features.max_df_ratio = parse_real(key, value);
  } else if (key == "n_min") {
    c.features.n_min = parse_int<int>(key, value);
  } else if (key == "n_max") {
    c.features.n_max = parse_int<int>(key, value);
  } else if (key == "stop_words_file") {
    std::filesystem::path p{std::string(value)};
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    c.cleaning.stop_words = read_stop_words_file(p);
    c.stop_words_file = p.string();
  } else if (key == "leakage_phrases") {
    c.cleaning.leakage_phrases.clear();
    std::size_t pos = 0;
    while (pos <= value.size()) {
      auto end = value.find(',', pos);
      if (end == std::string_view::npos) end = value.size();
      const auto phrase = trim(value.substr(pos, end - pos));
      if (!phrase.empty()) c.cleaning.leakage_phrases.emplace_back(phrase);
      pos = end + 1;
    }
  } else if (key == "assault_domain") {
    c.cleaning.assault_domain = parse_bool(key, value);
  } else {
    throw UsageError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_text(PipelineConfig& config, std::string_view text,
                       const std::filesystem::path& base_dir) {
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": expected 'key = value'");
    }
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1), base_dir);
  }
}

void load_config_file(PipelineConfig& config,
                      const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_text(config, ss.str(), path.parent_path());
}

void validate(const PipelineConfig& config) {
  validate(config.split);
  validate(config.features);
  validate(config.train);
}

nlohmann::json to_json(const TrainConfig& c) {
  return {{"epsilon", c.epsilon},
          {"alpha", c.alpha},
          {"max_epochs", c.max_epochs},
          {"eta0", c.eta0},
          {"power_t", c.power_t},
          {"early_stop_patience", c.early_stop_patience},
          {"early_stop_tol", c.early_stop_tol},
          {"seed", c.seed}};
}

TrainConfig train_config_from_json(const nlohmann::json& j) {
  TrainConfig c;
  c.epsilon = j.at("epsilon").get<double>();
  c.alpha = j.at("alpha").get<double>();
  c.max_epochs = j.at("max_epochs").get<int>();
  c.eta0 = j.at("eta0").get<double>();
  c.power_t = j.at("power_t").get<double>();
  c.early_stop_patience = j.at("early_stop_patience").get<int>();
  c.early_stop_tol = j.at("early_stop_tol").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

nlohmann::json to_json(const PipelineConfig& c) {
  return {
      {"train", to_json(c.train)},
      {"split",
       {{"train_fraction", c.split.train_fraction},
        {"val_fraction", c.split.val_fraction},
        {"test_fraction", c.split.test_fraction},
        {"seed", c.split.seed}}},
      {"features",
       {{"min_df", c.features.min_df},
        {"max_df_ratio", c.features.max_df_ratio},
        {"n_min", c.features.n_min},
        {"n_max", c.features.n_max}}},
      {"cleaning",
       {{"stop_words_file",
         c.stop_words_file.empty() ? "(built-in en v1)" : c.stop_words_file},
        {"stop_words_hash", stop_words_fingerprint(c.cleaning.stop_words)},
        {"leakage_phrases", c.cleaning.leakage_phrases},
        {"assault_domain", c.cleaning.assault_domain}}},
  };
}

}  // namespace lexsent

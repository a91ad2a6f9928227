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

#ifndef LEXSENT_CORE_CORPUS_HPP_
#define LEXSENT_CORE_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexsent {

// Upper end of the observed assault sentencing range (14.5 years).
inline constexpr double kAssaultMaxMonths = 174.0;

struct RawDocument {
  std::string id;
  std::string text;
};

struct LabeledDocument {
  std::string id;
  std::string cleaned_text;
  double sentence_months = 0.0;
};

struct CleaningConfig {
  std::set<std::string> stop_words;
  std::vector<std::string> leakage_phrases;
  // Rejects labels above kAssaultMaxMonths when set.
  bool assault_domain = false;
};

// Contents of data/stopwords_en_v1.txt, compiled in.
const char* default_stop_words_text();
std::set<std::string> default_stop_words();
std::vector<std::string> default_leakage_phrases();
CleaningConfig default_cleaning_config();

// One token per line; blank lines and surrounding whitespace ignored.
std::set<std::string> parse_stop_words(std::string_view text);
std::set<std::string> read_stop_words_file(const std::filesystem::path& path);
std::string stop_words_fingerprint(const std::set<std::string>& stop_words);

// Lowercases, folds accents, tokenizes on non-alphanumerics, then removes
// leakage phrases, standalone numbers, month/year words and stop words.
// Output tokens are joined by single spaces. Idempotent.
std::string clean_text(std::string_view raw,
                       const std::set<std::string>& stop_words,
                       std::span<const std::string> leakage_phrases);

inline std::string clean_text(std::string_view raw,
                              const CleaningConfig& config) {
  return clean_text(raw, config.stop_words, config.leakage_phrases);
}

// Cleans and labels documents in input order. Throws CorpusError listing
// every missing/invalid label, duplicate id and document that is empty after
// cleaning.
std::vector<LabeledDocument> load_corpus(
    std::span<const RawDocument> documents,
    const std::map<std::string, double>& labels,
    const CleaningConfig& config);

struct SplitSpec {
  double train_fraction = 0.65;
  double val_fraction = 0.10;
  double test_fraction = 0.25;
  std::uint64_t seed = 0;
};

void validate(const SplitSpec& spec);

struct SplitSizes {
  std::size_t train = 0;
  std::size_t val = 0;
  std::size_t test = 0;
};

// n_test = floor(test_fraction * n), n_val = floor(val_fraction * n), the
// remainder goes to training.
SplitSizes split_sizes(std::size_t n, const SplitSpec& spec);

struct CorpusSplit {
  std::vector<LabeledDocument> train;
  std::vector<LabeledDocument> val;
  std::vector<LabeledDocument> test;
};

inline constexpr std::size_t kMinSplitCorpusSize = 10;

// Seeded Fisher-Yates shuffle, then test, val and train are taken in that
// order from the shuffled sequence.
CorpusSplit split_corpus(std::span<const LabeledDocument> corpus,
                         const SplitSpec& spec);

// Reads every *.txt file in dir (sorted by file name); id is the file stem.
std::vector<RawDocument> read_corpus_directory(
    const std::filesystem::path& dir);

// CSV with header "id,sentence_months".
std::map<std::string, double> read_labels_csv(
    const std::filesystem::path& path);

}  // namespace lexsent

#endif  // LEXSENT_CORE_CORPUS_HPP_

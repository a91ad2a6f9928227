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

#ifndef LEXSENT_CORE_NGRAM_FEATURES_HPP_
#define LEXSENT_CORE_NGRAM_FEATURES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexsent {

struct SparseEntry {
  std::uint32_t index = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Sorted, duplicate-free list of non-zero entries below dimension().
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dimension) : dimension_(dimension) {}

  // Validates the invariants; entries need not be sorted on input. Zero
  // values are dropped.
  static SparseVector from_entries(std::size_t dimension,
                                   std::vector<SparseEntry> entries);

  std::size_t dimension() const { return dimension_; }
  std::span<const SparseEntry> entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // 0 for indices that are not stored.
  double at(std::uint32_t index) const;
  double sum() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<SparseEntry> entries_;
};

struct VocabularyOptions {
  int min_df = 3;
  double max_df_ratio = 0.9;
  int n_min = 1;
  int n_max = 3;
};

void validate(const VocabularyOptions& options);

// Largest document frequency that survives pruning for n training docs.
int max_doc_freq(std::size_t n_docs, double max_df_ratio);

// Lexicographically ordered n-gram index with training document frequencies.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Rebuilds a vocabulary from stored parts (model files). Terms must be
  // strictly increasing and doc_freq aligned with them.
  static Vocabulary from_parts(std::vector<std::string> terms,
                               std::vector<int> doc_freq, std::size_t n_docs,
                               int n_min, int n_max);

  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(std::size_t i) const { return terms_[i]; }
  const std::vector<int>& doc_freqs() const { return doc_freq_; }
  int doc_freq(std::size_t i) const { return doc_freq_[i]; }
  std::size_t n_docs() const { return n_docs_; }
  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }

  std::optional<std::uint32_t> find(std::string_view term) const;

 private:
  friend Vocabulary fit_vocabulary(std::span<const std::string>,
                                   const VocabularyOptions&);
  void build_index();

  std::vector<std::string> terms_;
  std::vector<int> doc_freq_;
  std::size_t n_docs_ = 0;
  int n_min_ = 1;
  int n_max_ = 3;
  std::unordered_map<std::string, std::uint32_t> index_;
};

struct IdfWeights {
  std::vector<double> values;
};

// Splits cleaned text on spaces; runs of spaces collapse.
std::vector<std::string> tokenize(std::string_view cleaned_text);

// All contiguous n-grams for n in [n_min, n_max], left to right for each n,
// n ascending. Duplicates are kept.
std::vector<std::string> extract_ngrams(std::span<const std::string> tokens,
                                        int n_min, int n_max);

// Keeps n-grams with min_df <= df <= floor(max_df_ratio * n_docs).
Vocabulary fit_vocabulary(std::span<const std::string> train_docs,
                          const VocabularyOptions& options = {});

SparseVector count_vector(std::string_view cleaned_text,
                          const Vocabulary& vocab);

// Divides every entry by the vector's sum (in-vocabulary counts only).
SparseVector term_frequency(const SparseVector& counts);

// idf = ln((1 + n) / (1 + df)) + 1.
IdfWeights fit_idf(const Vocabulary& vocab);

SparseVector transform_tfidf(std::string_view cleaned_text,
                             const Vocabulary& vocab, const IdfWeights& idf);

}  // namespace lexsent

#endif  // LEXSENT_CORE_NGRAM_FEATURES_HPP_

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

#include "core/ngram_features.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace lexsent {

SparseVector SparseVector::from_entries(std::size_t dimension,
                                        std::vector<SparseEntry> entries) {
  std::erase_if(entries, [](const SparseEntry& e) { return e.value == 0.0; });
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) {
              return a.index < b.index;
            });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].index >= dimension) {
      throw DataError("sparse index " + std::to_string(entries[i].index) +
                      " out of range for dimension " +
                      std::to_string(dimension));
    }
    if (i > 0 && entries[i].index == entries[i - 1].index) {
      throw DataError("duplicate sparse index " +
                      std::to_string(entries[i].index));
    }
  }
  SparseVector v(dimension);
  v.entries_ = std::move(entries);
  return v;
}

double SparseVector::at(std::uint32_t index) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const SparseEntry& e, std::uint32_t i) { return e.index < i; });
  return it != entries_.end() && it->index == index ? it->value : 0.0;
}

double SparseVector::sum() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.value;
  return s;
}

void validate(const VocabularyOptions& options) {
  if (options.n_min < 1 || options.n_max < options.n_min) {
    throw UsageError("n-gram range must satisfy 1 <= n_min <= n_max");
  }
  if (options.min_df < 1) throw UsageError("min_df must be >= 1");
  if (!(options.max_df_ratio > 0.0 && options.max_df_ratio <= 1.0)) {
    throw UsageError("max_df_ratio must be in (0, 1]");
  }
}

int max_doc_freq(std::size_t n_docs, double max_df_ratio) {
  return static_cast<int>(
      std::floor(max_df_ratio * static_cast<double>(n_docs) + 1e-9));
}

Vocabulary Vocabulary::from_parts(std::vector<std::string> terms,
                                  std::vector<int> doc_freq,
                                  std::size_t n_docs, int n_min, int n_max) {
  if (terms.size() != doc_freq.size()) {
    throw DataError("vocabulary terms and doc_freq differ in length");
  }
  if (n_min < 1 || n_max < n_min) throw DataError("invalid n-gram range");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0 && !(terms[i - 1] < terms[i])) {
      throw DataError("vocabulary terms not strictly increasing at '" +
                      terms[i] + "'");
    }
    if (doc_freq[i] < 1 || static_cast<std::size_t>(doc_freq[i]) > n_docs) {
      throw DataError("doc_freq out of range for '" + terms[i] + "'");
    }
  }
  Vocabulary v;
  v.terms_ = std::move(terms);
  v.doc_freq_ = std::move(doc_freq);
  v.n_docs_ = n_docs;
  v.n_min_ = n_min;
  v.n_max_ = n_max;
  v.build_index();
  return v;
}

void Vocabulary::build_index() {
  index_.clear();
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    index_.emplace(terms_[i], static_cast<std::uint32_t>(i));
  }
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> tokenize(std::string_view cleaned_text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < cleaned_text.size()) {
    const auto start = cleaned_text.find_first_not_of(' ', pos);
    if (start == std::string_view::npos) break;
    auto end = cleaned_text.find(' ', start);
    if (end == std::string_view::npos) end = cleaned_text.size();
    tokens.emplace_back(cleaned_text.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

std::vector<std::string> extract_ngrams(std::span<const std::string> tokens,
                                        int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) {
    throw UsageError("n-gram range must satisfy 1 <= n_min <= n_max");
  }
  std::vector<std::string> grams;
  for (int n = n_min; n <= n_max; ++n) {
    const auto len = static_cast<std::size_t>(n);
    if (tokens.size() < len) break;
    for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
      std::string gram = tokens[i];
      for (std::size_t k = 1; k < len; ++k) {
        gram += ' ';
        gram += tokens[i + k];
      }
      grams.push_back(std::move(gram));
    }
  }
  return grams;
}

Vocabulary fit_vocabulary(std::span<const std::string> train_docs,
                          const VocabularyOptions& options) {
  validate(options);
  if (train_docs.empty()) throw DataError("cannot fit vocabulary: no documents");

  std::unordered_map<std::string, int> df;
  for (const auto& doc : train_docs) {
    auto grams = extract_ngrams(tokenize(doc), options.n_min, options.n_max);
    std::sort(grams.begin(), grams.end());
    grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
    for (auto& g : grams) ++df[std::move(g)];
  }

  const int upper = max_doc_freq(train_docs.size(), options.max_df_ratio);
  std::vector<std::pair<std::string, int>> kept;
  for (auto& [term, count] : df) {
    if (count >= options.min_df && count <= upper) kept.emplace_back(term, count);
  }
  if (kept.empty()) {
    throw DataError("no n-gram survives document-frequency pruning (min_df=" +
                    std::to_string(options.min_df) +
                    ", max_df=" + std::to_string(upper) + " of " +
                    std::to_string(train_docs.size()) + " documents)");
  }
  std::sort(kept.begin(), kept.end());

  Vocabulary vocab;
  vocab.terms_.reserve(kept.size());
  vocab.doc_freq_.reserve(kept.size());
  for (auto& [term, count] : kept) {
    vocab.terms_.push_back(std::move(term));
    vocab.doc_freq_.push_back(count);
  }
  vocab.n_docs_ = train_docs.size();
  vocab.n_min_ = options.n_min;
  vocab.n_max_ = options.n_max;
  vocab.build_index();
  return vocab;
}

SparseVector count_vector(std::string_view cleaned_text,
                          const Vocabulary& vocab) {
  const auto grams =
      extract_ngrams(tokenize(cleaned_text), vocab.n_min(), vocab.n_max());
  std::unordered_map<std::uint32_t, double> counts;
  for (const auto& g : grams) {
    if (const auto idx = vocab.find(g)) counts[*idx] += 1.0;
  }
  std::vector<SparseEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [idx, c] : counts) entries.push_back({idx, c});
  return SparseVector::from_entries(vocab.size(), std::move(entries));
}

SparseVector term_frequency(const SparseVector& counts) {
  const double total = counts.sum();
  std::vector<SparseEntry> entries(counts.entries().begin(),
                                   counts.entries().end());
  for (auto& e : entries) e.value /= total;
  return SparseVector::from_entries(counts.dimension(), std::move(entries));
}

IdfWeights fit_idf(const Vocabulary& vocab) {
  if (vocab.n_docs() == 0) throw DataError("vocabulary has no documents");
  const double n = static_cast<double>(vocab.n_docs());
  IdfWeights idf;
  idf.values.reserve(vocab.size());
  for (int df : vocab.doc_freqs()) {
    idf.values.push_back(std::log((1.0 + n) / (1.0 + df)) + 1.0);
  }
  return idf;
}

SparseVector transform_tfidf(std::string_view cleaned_text,
                             const Vocabulary& vocab, const IdfWeights& idf) {
  if (idf.values.size() != vocab.size()) {
    throw DataError("idf weights do not match vocabulary size");
  }
  const auto tf = term_frequency(count_vector(cleaned_text, vocab));
  std::vector<SparseEntry> entries(tf.entries().begin(), tf.entries().end());
  for (auto& e : entries) e.value *= idf.values[e.index];
  return SparseVector::from_entries(vocab.size(), std::move(entries));
}

}  // namespace lexsent

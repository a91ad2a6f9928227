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

#ifndef LEXSENT_CORE_SYNTH_HPP_
#define LEXSENT_CORE_SYNTH_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "core/corpus.hpp"

namespace lexsent {

struct SynthParams {
  std::size_t n_docs = 300;
  std::size_t vocab_size = 30;
  double sparsity = 0.3;  // fraction of phrases with a non-zero planted weight
  double noise_sigma = 1.0;
  std::uint64_t seed = 0;
  double intercept = 60.0;
};

void validate(const SynthParams& params);

struct PlantedTerm {
  std::string term;
  double tf_weight = 0.0;  // months per unit of term frequency
};

// Targets are intercept + sum_j tf_weight_j * tf_j(doc) + N(0, sigma^2),
// where tf_j is the term's share of in-vocabulary n-gram counts. A model on
// tf-idf features realises this exactly with w_j = tf_weight_j / idf_j.
//
// Each document is boilerplate shared by every document (pruned by max_df),
// planted phrases separated by filler words unique to the corpus (pruned by
// min_df), and closing lines stating the sentence length and a detention
// phrase tied to it, which the cleaning rules must strip.
struct SynthCorpus {
  std::vector<RawDocument> documents;
  std::vector<double> labels;  // aligned with documents
  std::vector<PlantedTerm> planted;
  SynthParams params;
};

SynthCorpus generate_synthetic_corpus(const SynthParams& params);

// Writes <dir>/<id>.txt, <dir>/labels.csv and <dir>/ground_truth.json.
void write_synthetic_corpus(const SynthCorpus& corpus,
                            const std::filesystem::path& dir);

}  // namespace lexsent

#endif  // LEXSENT_CORE_SYNTH_HPP_

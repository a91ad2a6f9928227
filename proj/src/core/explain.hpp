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

#ifndef LEXSENT_CORE_EXPLAIN_HPP_
#define LEXSENT_CORE_EXPLAIN_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "core/ngram_features.hpp"
#include "core/sgd_regressor.hpp"

namespace lexsent {

struct PhraseInfluence {
  std::string phrase;
  double raw_weight = 0.0;
  double adjusted_weight = 0.0;  // raw_weight * idf
  double doc_freq_ratio = 0.0;   // df / n_docs
};

struct GlobalRanking {
  std::vector<PhraseInfluence> top_positive;  // descending adjusted weight
  std::vector<PhraseInfluence> top_negative;  // most negative first
};

struct Contribution {
  std::string phrase;
  double tfidf = 0.0;
  double weight = 0.0;
  double contribution = 0.0;  // weight * tfidf
};

struct DocumentExplanation {
  double prediction = 0.0;
  double intercept = 0.0;
  // Sum over every non-zero feature, before truncation to k.
  double contribution_total = 0.0;
  std::size_t feature_count = 0;
  // Top k by |contribution|, descending.
  std::vector<Contribution> contributions;
};

struct ScatterPoint {
  std::string id;
  double truth_months = 0.0;
  double predicted_months = 0.0;
};

struct LabeledExample {
  std::string id;
  Example example;
};

// Up to k phrases per sign by weight * idf; zero weights never appear and
// ties break lexicographically on the phrase.
GlobalRanking global_ranking(const LinearModel& model, const Vocabulary& vocab,
                             const IdfWeights& idf, std::size_t k);

// Decomposes the prediction for one cleaned document. k = 0 keeps every
// contribution.
DocumentExplanation explain_document(const LinearModel& model,
                                     std::string_view cleaned_text,
                                     const Vocabulary& vocab,
                                     const IdfWeights& idf, std::size_t k);

std::vector<ScatterPoint> scatter_data(const LinearModel& model,
                                       std::span<const LabeledExample> data);

// CSV/JSON renderings used by the CLI, the service and the C API.
std::string ranking_csv(const GlobalRanking& ranking);
std::string ranking_json(const GlobalRanking& ranking);
std::string explanation_csv(const DocumentExplanation& explanation);
std::string explanation_json(const DocumentExplanation& explanation);
std::string scatter_csv(const std::vector<ScatterPoint>& points);
std::string scatter_json(const std::vector<ScatterPoint>& points);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace lexsent

#endif  // LEXSENT_CORE_EXPLAIN_HPP_

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

#include "core/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "core/error.hpp"
#include "core/explain.hpp"
#include "core/model_io.hpp"
#include "core/random.hpp"
#include "json.hpp"

namespace lexsent {
namespace {

constexpr std::string_view kConsonants = "bdfghklmnprstvz";
constexpr std::string_view kVowels = "aeiou";
constexpr std::size_t kMaxPhrasesPerDoc = 8;

std::string pseudo_word(Rng& rng, int syllables) {
  std::string w;
  for (int s = 0; s < syllables; ++s) {
    w += kConsonants[rng.uniform_below(kConsonants.size())];
    w += kVowels[rng.uniform_below(kVowels.size())];
  }
  return w;
}

// "zq" prefix plus a base-26 counter: never collides with the
// consonant-vowel phrase words and never repeats within a corpus.
std::string filler_word(std::uint64_t counter) {
  std::string digits;
  do {
    digits += static_cast<char>('a' + counter % 26);
    counter /= 26;
  } while (counter > 0);
  return "zq" + std::string(digits.rbegin(), digits.rend());
}

std::string doc_id(std::size_t i, std::size_t n) {
  const int width = std::max(4, static_cast<int>(std::to_string(n).size()));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "case_%0*zu", width, i + 1);
  return buf;
}

}  // namespace

void validate(const SynthParams& p) {
  if (p.n_docs < kMinSplitCorpusSize) {
    throw UsageError("synth needs at least 10 documents");
  }
  if (p.vocab_size < 1 || p.vocab_size > 5000) {
    throw UsageError("synth vocab_size must be in [1, 5000]");
  }
  if (!(p.sparsity > 0.0 && p.sparsity <= 1.0)) {
    throw UsageError("synth sparsity must be in (0, 1]");
  }
  if (!(p.noise_sigma >= 0.0) || !std::isfinite(p.noise_sigma)) {
    throw UsageError("synth noise_sigma must be >= 0");
  }
}

SynthCorpus generate_synthetic_corpus(const SynthParams& params) {
  validate(params);
  Rng rng(params.seed);
  const auto stop_words = default_stop_words();

  SynthCorpus out;
  out.params = params;

  std::set<std::string> used;
  while (out.planted.size() < params.vocab_size) {
    auto w = pseudo_word(rng, 3);
    if (stop_words.count(w) || !used.insert(w).second) continue;
    out.planted.push_back({std::move(w), 0.0});
  }

  const auto n_active = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::llround(params.sparsity * params.vocab_size)));
  std::vector<std::size_t> order(params.vocab_size);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(std::span<std::size_t>(order));
  for (std::size_t a = 0; a < n_active; ++a) {
    const double magnitude = 20.0 + 30.0 * rng.uniform01();
    out.planted[order[a]].tf_weight =
        rng.uniform_below(2) == 0 ? magnitude : -magnitude;
  }

  std::uint64_t filler_counter = 0;
  const auto filler = [&] { return filler_word(filler_counter++); };
  const std::size_t max_phrases =
      std::min(kMaxPhrasesPerDoc, params.vocab_size);

  for (std::size_t d = 0; d < params.n_docs; ++d) {
    double months = -1.0;
    std::string body;
    // Resample the rare document whose noisy target would be negative.
    while (months < 0.0) {
      const auto m = static_cast<std::size_t>(rng.uniform_below(max_phrases + 1));
      std::vector<std::size_t> picks(params.vocab_size);
      for (std::size_t i = 0; i < picks.size(); ++i) picks[i] = i;
      rng.shuffle(std::span<std::size_t>(picks));
      picks.resize(m);

      std::vector<std::size_t> occurrences;
      double signal = 0.0;
      std::size_t total = 0;
      std::vector<std::size_t> counts(m);
      for (std::size_t k = 0; k < m; ++k) {
        counts[k] = 1 + static_cast<std::size_t>(rng.uniform_below(3));
        total += counts[k];
        for (std::size_t c = 0; c < counts[k]; ++c) occurrences.push_back(picks[k]);
      }
      for (std::size_t k = 0; k < m; ++k) {
        signal += out.planted[picks[k]].tf_weight *
                  static_cast<double>(counts[k]) / static_cast<double>(total);
      }
      rng.shuffle(std::span<std::size_t>(occurrences));

      body.clear();
      for (const auto term : occurrences) {
        const auto n_fill = 1 + rng.uniform_below(2);
        for (std::uint64_t f = 0; f < n_fill; ++f) body += filler() + ' ';
        body += out.planted[term].term + ", ";
      }
      body += filler() + ".";
      months = params.intercept + signal + params.noise_sigma * rng.normal();
    }

    std::string text = "IN THE DISTRICT COURT AT AUCKLAND\n\nTHE QUEEN v " +
                       filler() + "\n\nNOTES OF JUDGE ON SENTENCING\n\n[1] " +
                       body + "\n";
    const long long whole = std::llround(months);
    // Label-correlated leakage phrases; cleaning must remove them.
    const char* detention = whole < 12   ? "community"
                            : whole < 24 ? "home"
                                         : "preventative";
    text += std::string("[2] Counsel addressed ") + detention + " detention.\n";
    text += "[3] The end sentence is " + std::to_string(whole) + " months (" +
            std::to_string(whole / 12) + " years).\n";

    out.documents.push_back({doc_id(d, params.n_docs), std::move(text)});
    out.labels.push_back(months);
  }
  return out;
}

void write_synthetic_corpus(const SynthCorpus& corpus,
                            const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string());

  std::string labels = "id,sentence_months\n";
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    const auto& doc = corpus.documents[i];
    write_file_atomic(dir / (doc.id + ".txt"), doc.text);
    labels += doc.id + "," + format_double(corpus.labels[i]) + "\n";
  }
  write_file_atomic(dir / "labels.csv", labels);

  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : corpus.planted) {
    terms.push_back({{"term", t.term}, {"tf_weight", t.tf_weight}});
  }
  const auto& p = corpus.params;
  const nlohmann::json truth{
      {"intercept", p.intercept},
      {"noise_sigma", p.noise_sigma},
      {"seed", p.seed},
      {"n_docs", p.n_docs},
      {"vocab_size", p.vocab_size},
      {"sparsity", p.sparsity},
      {"target",
       "intercept + sum(tf_weight * tf(term)) + noise; tf is the term's share "
       "of in-vocabulary n-gram counts, so tf-idf weights are tf_weight / idf"},
      {"terms", terms}};
  write_file_atomic(dir / "ground_truth.json", truth.dump(2) + "\n");
}

}  // namespace lexsent

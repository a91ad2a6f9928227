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

#include <cmath>

#include "core/error.hpp"
#include "core/random.hpp"
#include "doctest.h"
#include "oracles/tfidf_oracle.hpp"

using namespace lexsent;
using Strings = std::vector<std::string>;

namespace {

std::string repeat_docs(const std::string& word, int with, int without,
                        Strings& docs) {
  for (int i = 0; i < with; ++i) docs.push_back(word + " filler" + std::to_string(i));
  for (int i = 0; i < without; ++i) docs.push_back("other" + std::to_string(i));
  return word;
}

}  // namespace

TEST_CASE("tokenize") {
  CHECK(tokenize("aggravated assault") == Strings{"aggravated", "assault"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("a b  c") == Strings{"a", "b", "c"});
  CHECK(tokenize("  a  ") == Strings{"a"});
}

TEST_CASE("extract_ngrams") {
  const Strings tokens = {"aggravated", "assault", "with"};
  CHECK(extract_ngrams(tokens, 1, 3) ==
        Strings{"aggravated", "assault", "with", "aggravated assault",
                "assault with", "aggravated assault with"});
  CHECK(extract_ngrams(Strings{"x"}, 1, 3) == Strings{"x"});
  CHECK(extract_ngrams(Strings{}, 1, 3).empty());
  CHECK(extract_ngrams(Strings{"a", "a"}, 1, 1) == Strings{"a", "a"});
  CHECK(extract_ngrams(tokens, 2, 2) ==
        Strings{"aggravated assault", "assault with"});
  CHECK_THROWS_AS(extract_ngrams(tokens, 0, 2), UsageError);
  CHECK_THROWS_AS(extract_ngrams(tokens, 3, 2), UsageError);
}

TEST_CASE("fit_vocabulary prunes by document frequency") {
  const VocabularyOptions unigrams{3, 0.9, 1, 1};
  SUBCASE("below min_df") {
    const Strings docs = {"assault x", "assault y", "z", "w"};
    const auto vocab = fit_vocabulary(docs, VocabularyOptions{2, 1.0, 1, 1});
    CHECK(vocab.find("assault").has_value());
    CHECK_THROWS_AS(fit_vocabulary(docs, unigrams), DataError);
  }
  SUBCASE("above max_df: 10 of 10 > 9") {
    Strings docs;
    for (int i = 0; i < 10; ++i) {
      docs.push_back("court" + std::string(i < 3 ? " taueki" : ""));
    }
    const auto vocab = fit_vocabulary(docs, unigrams);
    CHECK_FALSE(vocab.find("court").has_value());
    REQUIRE(vocab.find("taueki").has_value());
    CHECK(vocab.doc_freq(*vocab.find("taueki")) == 3);
  }
  SUBCASE("upper boundary df == floor(0.9 n) is kept") {
    Strings docs;
    repeat_docs("edge", 9, 1, docs);
    const auto vocab = fit_vocabulary(docs, unigrams);
    REQUIRE(vocab.find("edge").has_value());
    CHECK(vocab.doc_freq(*vocab.find("edge")) == 9);
  }
  SUBCASE("df counts documents, not occurrences") {
    Strings docs = {"a a a a", "a b", "b", "b", "c"};
    const auto vocab = fit_vocabulary(docs, unigrams);
    CHECK_FALSE(vocab.find("a").has_value());
    CHECK(vocab.doc_freq(*vocab.find("b")) == 3);
  }
  CHECK_THROWS_AS(fit_vocabulary(Strings{}, unigrams), DataError);
}

TEST_CASE("vocabulary invariants hold on random corpora") {
  Rng rng(3);
  const Strings alphabet = {"a", "b", "c", "d", "e"};
  for (int trial = 0; trial < 30; ++trial) {
    Strings docs;
    const auto n = 5 + rng.uniform_below(25);
    for (std::uint64_t d = 0; d < n; ++d) {
      std::string doc;
      const auto len = 1 + rng.uniform_below(12);
      for (std::uint64_t i = 0; i < len; ++i) {
        doc += (i ? " " : "") + alphabet[rng.uniform_below(alphabet.size())];
      }
      docs.push_back(doc);
    }
    Vocabulary vocab;
    try {
      vocab = fit_vocabulary(docs);
    } catch (const DataError&) {
      continue;
    }
    const int upper = max_doc_freq(n, 0.9);
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      CHECK(vocab.find(vocab.term(i)) == static_cast<std::uint32_t>(i));
      if (i > 0) CHECK(vocab.term(i - 1) < vocab.term(i));
      CHECK(vocab.doc_freq(i) >= 3);
      CHECK(vocab.doc_freq(i) <= upper);
      const auto words = tokenize(vocab.term(i)).size();
      CHECK(words >= 1);
      CHECK(words <= 3);
    }
  }
}

TEST_CASE("count_vector") {
  const auto vocab = Vocabulary::from_parts(
      {"assault", "assault victim", "victim"}, {3, 3, 3}, 10, 1, 3);
  const auto v = count_vector("assault assault victim", vocab);
  CHECK(v.dimension() == 3);
  CHECK(v.at(*vocab.find("assault")) == 2.0);
  CHECK(v.at(*vocab.find("victim")) == 1.0);
  CHECK(v.at(*vocab.find("assault victim")) == 1.0);
  CHECK(v.nnz() == 3);

  CHECK(count_vector("nothing here", vocab).empty());

  const auto bigram = Vocabulary::from_parts({"aggravated assault"}, {4}, 10, 1, 3);
  CHECK(count_vector("aggravated assault then aggravated assault", bigram).at(0) ==
        2.0);
}

TEST_CASE("term_frequency") {
  const auto tf = term_frequency(SparseVector::from_entries(2, {{0, 2}, {1, 1}}));
  CHECK(tf.at(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(tf.at(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(term_frequency(SparseVector::from_entries(6, {{5, 7}})).at(5) == 1.0);
  CHECK(term_frequency(SparseVector(4)).empty());

  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SparseEntry> entries;
    for (std::uint32_t i = 0; i < 20; ++i) {
      if (rng.uniform_below(3) == 0) {
        entries.push_back({i, 1.0 + static_cast<double>(rng.uniform_below(9))});
      }
    }
    if (entries.empty()) continue;
    const auto tf = term_frequency(SparseVector::from_entries(20, entries));
    CHECK(tf.sum() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("fit_idf") {
  const auto idf = [](std::size_t n, int df) {
    return fit_idf(Vocabulary::from_parts({"t"}, {df}, n, 1, 1)).values[0];
  };
  CHECK(idf(3, 3) == 1.0);
  CHECK(idf(3, 1) == doctest::Approx(1.693147).epsilon(1e-6));
  CHECK(idf(9, 4) == doctest::Approx(1.693147).epsilon(1e-6));

  double previous = std::numeric_limits<double>::infinity();
  for (int df = 1; df <= 50; ++df) {
    const double v = idf(50, df);
    CHECK(v >= 1.0);
    CHECK(v < previous);
    previous = v;
  }
}

TEST_CASE("transform_tfidf") {
  const auto vocab = Vocabulary::from_parts({"assault"}, {1}, 1, 1, 1);
  IdfWeights idf{{1.5}};
  const auto v = transform_tfidf("assault", vocab, idf);
  CHECK(v.at(0) == 1.5);
  CHECK(transform_tfidf("unknown words", vocab, idf).empty());
  CHECK_THROWS_AS(transform_tfidf("assault", vocab, IdfWeights{}), DataError);
}

TEST_CASE("transform_tfidf matches the brute-force oracle") {
  Rng rng(2024);
  const Strings alphabet = {"victim", "weapon", "injury", "guilty",
                            "remorse", "prior", "serious", "court"};
  for (int corpus = 0; corpus < 20; ++corpus) {
    Strings docs;
    const auto n = 6 + rng.uniform_below(15);
    for (std::uint64_t d = 0; d < n; ++d) {
      std::string doc;
      const auto len = rng.uniform_below(51);
      for (std::uint64_t i = 0; i < len; ++i) {
        doc += (i ? " " : "") + alphabet[rng.uniform_below(alphabet.size())];
      }
      docs.push_back(doc);
    }
    const auto expected = oracle::fit(docs, 3, 9, 10, 1, 3);
    if (expected.df.empty()) {
      CHECK_THROWS_AS(fit_vocabulary(docs), DataError);
      continue;
    }
    const auto vocab = fit_vocabulary(docs);
    const auto idf = fit_idf(vocab);
    REQUIRE(vocab.size() == expected.df.size());
    for (const auto& doc : docs) {
      const auto want = oracle::tfidf(expected, doc, 1, 3);
      const auto got = transform_tfidf(doc, vocab, idf);
      CHECK(got.nnz() == want.size());
      for (std::size_t i = 0; i < vocab.size(); ++i) {
        const auto it = want.find(vocab.term(i));
        const double w = it == want.end() ? 0.0 : it->second;
        CHECK(std::abs(got.at(static_cast<std::uint32_t>(i)) - w) <= 1e-9);
      }
    }
  }
}

TEST_CASE("SparseVector validation") {
  const auto v = SparseVector::from_entries(5, {{3, 1.0}, {1, 2.0}, {2, 0.0}});
  REQUIRE(v.nnz() == 2);
  CHECK(v.entries()[0].index == 1);
  CHECK(v.entries()[1].index == 3);
  CHECK_THROWS_AS(SparseVector::from_entries(2, {{2, 1.0}}), DataError);
  CHECK_THROWS_AS(SparseVector::from_entries(4, {{1, 1.0}, {1, 2.0}}), DataError);
}

TEST_CASE("Vocabulary::from_parts validates") {
  CHECK_THROWS_AS(Vocabulary::from_parts({"b", "a"}, {3, 3}, 10, 1, 1), DataError);
  CHECK_THROWS_AS(Vocabulary::from_parts({"a"}, {3, 3}, 10, 1, 1), DataError);
  CHECK_THROWS_AS(Vocabulary::from_parts({"a"}, {11}, 10, 1, 1), DataError);
  CHECK_NOTHROW(Vocabulary::from_parts({"a", "b"}, {3, 10}, 10, 1, 2));
}

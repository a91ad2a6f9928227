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

#include "core/explain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "core/error.hpp"
#include "json.hpp"

namespace lexsent {
namespace {

using nlohmann::json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json influence_json(const PhraseInfluence& p) {
  return json{{"phrase", p.phrase},
              {"adjusted_weight", p.adjusted_weight},
              {"raw_weight", p.raw_weight},
              {"doc_freq_ratio", p.doc_freq_ratio}};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

GlobalRanking global_ranking(const LinearModel& model, const Vocabulary& vocab,
                             const IdfWeights& idf, std::size_t k) {
  if (model.weights.size() != vocab.size() ||
      idf.values.size() != vocab.size()) {
    throw DataError("model, vocabulary and idf sizes disagree");
  }
  std::vector<PhraseInfluence> positive;
  std::vector<PhraseInfluence> negative;
  const double n = static_cast<double>(vocab.n_docs());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    const double w = model.weights[i];
    if (w == 0.0) continue;
    PhraseInfluence p{vocab.term(i), w, w * idf.values[i],
                      vocab.doc_freq(i) / n};
    if (p.adjusted_weight > 0.0) {
      positive.push_back(std::move(p));
    } else if (p.adjusted_weight < 0.0) {
      negative.push_back(std::move(p));
    }
  }
  const auto take_top = [k](std::vector<PhraseInfluence>& v, auto before) {
    const auto cut = std::min(k, v.size());
    std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cut),
                      v.end(), before);
    v.resize(cut);
  };
  take_top(positive, [](const PhraseInfluence& a, const PhraseInfluence& b) {
    if (a.adjusted_weight != b.adjusted_weight) {
      return a.adjusted_weight > b.adjusted_weight;
    }
    return a.phrase < b.phrase;
  });
  take_top(negative, [](const PhraseInfluence& a, const PhraseInfluence& b) {
    if (a.adjusted_weight != b.adjusted_weight) {
      return a.adjusted_weight < b.adjusted_weight;
    }
    return a.phrase < b.phrase;
  });
  return {std::move(positive), std::move(negative)};
}

DocumentExplanation explain_document(const LinearModel& model,
                                     std::string_view cleaned_text,
                                     const Vocabulary& vocab,
                                     const IdfWeights& idf, std::size_t k) {
  const auto x = transform_tfidf(cleaned_text, vocab, idf);
  DocumentExplanation out;
  out.prediction = predict(model, x);
  out.intercept = model.intercept;
  out.feature_count = x.nnz();
  out.contributions.reserve(x.nnz());
  for (const auto& e : x.entries()) {
    const double w = model.weights[e.index];
    const double c = w * e.value;
    out.contribution_total += c;
    out.contributions.push_back({vocab.term(e.index), e.value, w, c});
  }
  std::sort(out.contributions.begin(), out.contributions.end(),
            [](const Contribution& a, const Contribution& b) {
              const double ma = std::abs(a.contribution);
              const double mb = std::abs(b.contribution);
              if (ma != mb) return ma > mb;
              return a.phrase < b.phrase;
            });
  if (k > 0 && out.contributions.size() > k) out.contributions.resize(k);
  return out;
}

std::vector<ScatterPoint> scatter_data(const LinearModel& model,
                                       std::span<const LabeledExample> data) {
  if (data.empty()) throw DataError("scatter data needs a non-empty dataset");
  std::vector<ScatterPoint> points;
  points.reserve(data.size());
  for (const auto& d : data) {
    points.push_back(
        {d.id, d.example.months, predict(model, d.example.x)});
  }
  return points;
}

std::string ranking_csv(const GlobalRanking& ranking) {
  std::string out = "phrase,adjusted_weight,raw_weight,doc_freq_ratio\n";
  for (const auto* list : {&ranking.top_positive, &ranking.top_negative}) {
    for (const auto& p : *list) {
      out += csv_field(p.phrase) + ',' + format_double(p.adjusted_weight) +
             ',' + format_double(p.raw_weight) + ',' +
             format_double(p.doc_freq_ratio) + '\n';
    }
  }
  return out;
}

std::string ranking_json(const GlobalRanking& ranking) {
  json pos = json::array();
  json neg = json::array();
  for (const auto& p : ranking.top_positive) pos.push_back(influence_json(p));
  for (const auto& p : ranking.top_negative) neg.push_back(influence_json(p));
  return json{{"top_positive", pos}, {"top_negative", neg}}.dump(2) + "\n";
}

std::string explanation_csv(const DocumentExplanation& e) {
  std::string out = "# prediction=" + format_double(e.prediction) + "\n";
  out += "# intercept=" + format_double(e.intercept) + "\n";
  out += "# contribution_total=" + format_double(e.contribution_total) + "\n";
  out += "phrase,tfidf,weight,contribution\n";
  for (const auto& c : e.contributions) {
    out += csv_field(c.phrase) + ',' + format_double(c.tfidf) + ',' +
           format_double(c.weight) + ',' + format_double(c.contribution) +
           '\n';
  }
  return out;
}

std::string explanation_json(const DocumentExplanation& e) {
  json contributions = json::array();
  for (const auto& c : e.contributions) {
    contributions.push_back({{"phrase", c.phrase},
                             {"tfidf", c.tfidf},
                             {"weight", c.weight},
                             {"contribution", c.contribution}});
  }
  json doc{{"prediction", e.prediction},
           {"intercept", e.intercept},
           {"contribution_total", e.contribution_total},
           {"feature_count", e.feature_count},
           {"contributions", contributions}};
  return doc.dump(2) + "\n";
}

std::string scatter_csv(const std::vector<ScatterPoint>& points) {
  std::string out = "id,truth_months,predicted_months\n";
  for (const auto& p : points) {
    out += csv_field(p.id) + ',' + format_double(p.truth_months) + ',' +
           format_double(p.predicted_months) + '\n';
  }
  return out;
}

std::string scatter_json(const std::vector<ScatterPoint>& points) {
  json arr = json::array();
  for (const auto& p : points) {
    arr.push_back({{"id", p.id},
                   {"truth_months", p.truth_months},
                   {"predicted_months", p.predicted_months}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace lexsent

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

#include "core/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "core/error.hpp"
#include "core/hash.hpp"
#include "core/random.hpp"
#include "core/text_normalize.hpp"

namespace lexsent {
namespace {

const std::set<std::string_view> kMonthYearWords = {"month", "months", "year",
                                                    "years"};

std::string join_issues(const std::vector<std::string>& issues) {
  std::string msg = "corpus rejected (" + std::to_string(issues.size()) +
                    (issues.size() == 1 ? " problem)" : " problems)");
  for (const auto& issue : issues) msg += "\n  - " + issue;
  return msg;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Removes every occurrence of any phrase (as a token sequence). Returns true
// if anything was removed.
bool remove_phrases(std::vector<std::string>& tokens,
                    const std::vector<std::vector<std::string>>& phrases) {
  bool removed = false;
  std::vector<std::string> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t match_len = 0;
    for (const auto& phrase : phrases) {
      if (phrase.empty() || i + phrase.size() > tokens.size()) continue;
      if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + i)) {
        match_len = std::max(match_len, phrase.size());
      }
    }
    if (match_len > 0) {
      i += match_len;
      removed = true;
    } else {
      out.push_back(std::move(tokens[i]));
      ++i;
    }
  }
  tokens = std::move(out);
  return removed;
}

}  // namespace

CorpusError::CorpusError(std::vector<std::string> issues)
    : DataError(join_issues(issues)), issues_(std::move(issues)) {}

std::set<std::string> parse_stop_words(std::string_view text) {
  std::set<std::string> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto word = trim(text.substr(pos, end - pos));
    if (!word.empty()) words.emplace(word);
    pos = end + 1;
  }
  return words;
}

std::set<std::string> default_stop_words() {
  return parse_stop_words(default_stop_words_text());
}

std::set<std::string> read_stop_words_file(const std::filesystem::path& path) {
  return parse_stop_words(read_file(path));
}

std::vector<std::string> default_leakage_phrases() {
  return {"home detention", "community detention", "preventative detention"};
}

CleaningConfig default_cleaning_config() {
  return CleaningConfig{default_stop_words(), default_leakage_phrases(),
                        false};
}

std::string stop_words_fingerprint(const std::set<std::string>& stop_words) {
  std::string joined;
  for (const auto& w : stop_words) {
    joined += w;
    joined += '\n';
  }
  return fingerprint(joined);
}

std::string clean_text(std::string_view raw,
                       const std::set<std::string>& stop_words,
                       std::span<const std::string> leakage_phrases) {
  std::vector<std::vector<std::string>> phrases;
  phrases.reserve(leakage_phrases.size());
  for (const auto& p : leakage_phrases) phrases.push_back(normalize_tokens(p));

  auto tokens = normalize_tokens(raw);
  const auto drop = [&](const std::string& t) {
    return is_numeric_token(t) || kMonthYearWords.count(t) > 0 ||
           stop_words.count(t) > 0;
  };
  // Dropping tokens can make a leakage phrase adjacent again, so iterate to
  // a fixed point; each round strictly shrinks the sequence.
  for (;;) {
    bool changed = remove_phrases(tokens, phrases);
    const auto before = tokens.size();
    std::erase_if(tokens, drop);
    changed = changed || tokens.size() != before;
    if (!changed) break;
  }

  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::vector<LabeledDocument> load_corpus(
    std::span<const RawDocument> documents,
    const std::map<std::string, double>& labels,
    const CleaningConfig& config) {
  std::vector<std::string> issues;
  std::vector<LabeledDocument> out;
  out.reserve(documents.size());
  std::unordered_set<std::string> seen;

  for (const auto& doc : documents) {
    if (doc.id.empty()) {
      issues.push_back("document with empty id");
      continue;
    }
    if (!seen.insert(doc.id).second) {
      issues.push_back("duplicate id '" + doc.id + "'");
      continue;
    }
    const auto it = labels.find(doc.id);
    if (it == labels.end()) {
      issues.push_back("missing label for id '" + doc.id + "'");
      continue;
    }
    const double months = it->second;
    if (!std::isfinite(months) || months < 0.0) {
      issues.push_back("invalid label for id '" + doc.id +
                       "': must be finite and non-negative");
      continue;
    }
    if (config.assault_domain && months > kAssaultMaxMonths) {
      issues.push_back("label for id '" + doc.id +
                       "' exceeds 174 months (assault domain)");
      continue;
    }
    auto cleaned = clean_text(doc.text, config);
    if (cleaned.empty()) {
      issues.push_back("document '" + doc.id + "' is empty after cleaning");
      continue;
    }
    out.push_back({doc.id, std::move(cleaned), months});
  }
  if (!issues.empty()) throw CorpusError(std::move(issues));
  return out;
}

void validate(const SplitSpec& spec) {
  const bool positive = spec.train_fraction > 0.0 && spec.val_fraction > 0.0 &&
                        spec.test_fraction > 0.0;
  const double sum = spec.train_fraction + spec.val_fraction +
                     spec.test_fraction;
  if (!positive || std::abs(sum - 1.0) > 1e-9) {
    throw UsageError(
        "split fractions must be positive and sum to 1 (got train=" +
        std::to_string(spec.train_fraction) +
        ", val=" + std::to_string(spec.val_fraction) +
        ", test=" + std::to_string(spec.test_fraction) + ")");
  }
}

SplitSizes split_sizes(std::size_t n, const SplitSpec& spec) {
  validate(spec);
  // The small guard keeps products such as 0.29 * 100 = 28.999... from
  // flooring one below the intended integer.
  const auto portion = [n](double fraction) {
    return static_cast<std::size_t>(
        std::floor(fraction * static_cast<double>(n) + 1e-9));
  };
  SplitSizes sizes;
  sizes.test = portion(spec.test_fraction);
  sizes.val = portion(spec.val_fraction);
  sizes.train = n - sizes.test - sizes.val;
  return sizes;
}

CorpusSplit split_corpus(std::span<const LabeledDocument> corpus,
                         const SplitSpec& spec) {
  validate(spec);
  if (corpus.size() < kMinSplitCorpusSize) {
    throw DataError("corpus too small to split: " +
                    std::to_string(corpus.size()) + " documents, need at least " +
                    std::to_string(kMinSplitCorpusSize));
  }
  const auto sizes = split_sizes(corpus.size(), spec);
  if (sizes.train == 0 || sizes.val == 0 || sizes.test == 0) {
    throw DataError("split leaves an empty partition for " +
                    std::to_string(corpus.size()) + " documents");
  }

  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(spec.seed);
  rng.shuffle(std::span<std::size_t>(order));

  CorpusSplit split;
  std::size_t pos = 0;
  const auto take = [&](std::vector<LabeledDocument>& dst, std::size_t count) {
    dst.reserve(count);
    for (std::size_t k = 0; k < count; ++k) dst.push_back(corpus[order[pos++]]);
  };
  take(split.test, sizes.test);
  take(split.val, sizes.val);
  take(split.train, sizes.train);
  return split;
}

std::vector<RawDocument> read_corpus_directory(
    const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw DataError("corpus directory not found: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<RawDocument> docs;
  docs.reserve(files.size());
  for (const auto& f : files) {
    auto text = read_file(f);
    if (text.empty()) throw DataError("empty document file: " + f.string());
    docs.push_back({f.stem().string(), std::move(text)});
  }
  if (docs.empty()) {
    throw DataError("no .txt documents in " + dir.string());
  }
  return docs;
}

std::map<std::string, double> read_labels_csv(
    const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw DataError("labels file not found: " + path.string());
  }
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, double> labels;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = trim(line);
    if (line_no == 1 && row.starts_with("\xEF\xBB\xBF")) row.remove_prefix(3);
    if (row.empty()) continue;
    if (!header_seen) {
      if (row != "id,sentence_months") {
        throw DataError(path.string() +
                        ": expected header 'id,sentence_months'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = row.find(',');
    const auto where = path.string() + ":" + std::to_string(line_no);
    if (comma == std::string_view::npos) {
      throw DataError(where + ": expected 'id,sentence_months'");
    }
    const std::string id(trim(row.substr(0, comma)));
    const std::string value(trim(row.substr(comma + 1)));
    char* end = nullptr;
    const double months = std::strtod(value.c_str(), &end);
    if (id.empty() || value.empty() || end != value.c_str() + value.size()) {
      throw DataError(where + ": malformed row");
    }
    if (!labels.emplace(id, months).second) {
      throw DataError(where + ": duplicate label for id '" + id + "'");
    }
  }
  if (!header_seen) throw DataError(path.string() + ": empty labels file");
  return labels;
}

}  // namespace lexsent

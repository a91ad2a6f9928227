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

#include "core/service.hpp"

#include <charconv>
#include <cmath>

#include "core/error.hpp"
#include "httplib.h"
#include "json.hpp"

namespace lexsent {
namespace {

using nlohmann::json;

json contribution_array(const std::vector<Contribution>& contributions) {
  json arr = json::array();
  for (const auto& c : contributions) {
    arr.push_back({{"phrase", c.phrase},
                   {"tfidf", c.tfidf},
                   {"weight", c.weight},
                   {"contribution", c.contribution}});
  }
  return arr;
}

json influence_array(const std::vector<PhraseInfluence>& list) {
  json arr = json::array();
  for (const auto& p : list) {
    arr.push_back({{"phrase", p.phrase},
                   {"adjusted_weight", p.adjusted_weight},
                   {"raw_weight", p.raw_weight},
                   {"doc_freq_ratio", p.doc_freq_ratio}});
  }
  return arr;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() ||
      v < 1 || v > 100000) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

class Service::Http {
 public:
  httplib::Server server;
};

Service::Service(Predictor predictor, ServiceOptions options)
    : predictor_(std::move(predictor)),
      options_(std::move(options)),
      http_(std::make_unique<Http>()) {}

Service::~Service() { stop(); }

namespace {

HttpReply json_reply(int status, json body, const Predictor& p) {
  body["model_hash"] = p.model_hash();
  body["disclaimer"] = kDisclaimer;
  return {status, "application/json", body.dump() + "\n"};
}

HttpReply error_reply(int status, const std::string& message,
                      const Predictor& p) {
  return json_reply(status, json{{"error", message}}, p);
}

}  // namespace

HttpReply Service::handle_predict(std::string_view body) const {
  if (body.size() > kMaxRequestBytes) {
    return error_reply(413, "request body exceeds 1 MiB", predictor_);
  }
  json req;
  try {
    req = json::parse(body);
  } catch (const json::parse_error&) {
    return error_reply(400, "malformed JSON", predictor_);
  }
  if (!req.is_object() || !req.contains("text") || !req["text"].is_string()) {
    return error_reply(400, "expected an object with a string field 'text'",
                       predictor_);
  }
  const auto text = req["text"].get<std::string>();
  if (text.empty()) return error_reply(400, "text is empty", predictor_);

  std::size_t k = kDefaultContributionCount;
  if (req.contains("k")) {
    if (!req["k"].is_number_unsigned() || req["k"].get<std::size_t>() < 1) {
      return error_reply(400, "k must be a positive integer", predictor_);
    }
    k = req["k"].get<std::size_t>();
  }

  const auto result = predictor_.explain(text, k);
  const auto& e = result.explanation;
  if (!(std::abs(e.intercept + e.contribution_total - e.prediction) <= 1e-9)) {
    return error_reply(500, "contribution sum does not match prediction",
                       predictor_);
  }
  json resp{{"predicted_months", e.prediction},
            {"predicted_display", render_months(e.prediction)},
            {"out_of_range", result.out_of_range},
            {"intercept", e.intercept},
            {"contributions", contribution_array(e.contributions)},
            {"contribution_total", e.contribution_total},
            {"feature_count", e.feature_count},
            {"oov_note", result.oov}};
  return json_reply(200, std::move(resp), predictor_);
}

HttpReply Service::handle_global(std::optional<std::string_view> k) const {
  std::size_t count = kDefaultRankingCount;
  if (k) {
    const auto parsed = parse_count(*k);
    if (!parsed) {
      return error_reply(400, "k must be a positive integer", predictor_);
    }
    count = *parsed;
  }
  const auto ranking = predictor_.ranking(count);
  json resp{{"k", count},
            {"top_positive", influence_array(ranking.top_positive)},
            {"top_negative", influence_array(ranking.top_negative)}};
  return json_reply(200, std::move(resp), predictor_);
}

HttpReply Service::handle_model_summary() const {
  const auto& b = predictor_.bundle();
  json metrics = nullptr;
  if (b.metrics) {
    metrics = {{"train", to_json(b.metrics->train)},
               {"val", to_json(b.metrics->val)},
               {"test", to_json(b.metrics->test)}};
  }
  json resp{{"format_version", kModelFormatVersion},
            {"vocabulary_size", b.vocab.size()},
            {"nonzero_weights", count_nonzero(b.model)},
            {"n_docs", b.vocab.n_docs()},
            {"intercept", b.model.intercept},
            {"epochs_run", b.model.epochs_run},
            {"stopped_early", b.model.stopped_early},
            {"metrics", metrics},
            {"config",
             {{"train", to_json(b.model.config)},
              {"features",
               {{"n_min", b.features.n_min},
                {"n_max", b.features.n_max},
                {"min_df", b.features.min_df},
                {"max_df_ratio", b.features.max_df_ratio}}},
              {"cleaning",
               {{"stop_words_hash", stop_words_fingerprint(b.cleaning.stop_words)},
                {"leakage_phrases", b.cleaning.leakage_phrases},
                {"assault_domain", b.cleaning.assault_domain}}}}}};
  return json_reply(200, std::move(resp), predictor_);
}

HttpReply Service::handle_health() const {
  return {200, "text/plain", "ok"};
}

int Service::bind(const std::string& address, int port) {
  auto& srv = http_->server;
  srv.set_payload_max_length(kMaxRequestBytes);

  const auto send = [this](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_header("X-Model-Hash", predictor_.model_hash());
    res.set_content(reply.body, reply.content_type);
  };

  srv.Post("/api/v1/predict",
           [this, send](const httplib::Request& req, httplib::Response& res) {
             send(res, handle_predict(req.body));
           });
  srv.Get("/api/v1/explain/global",
          [this, send](const httplib::Request& req, httplib::Response& res) {
            std::optional<std::string_view> k;
            std::string k_value;
            if (req.has_param("k")) {
              k_value = req.get_param_value("k");
              k = k_value;
            }
            send(res, handle_global(k));
          });
  srv.Get("/api/v1/model",
          [this, send](const httplib::Request&, httplib::Response& res) {
            send(res, handle_model_summary());
          });
  srv.Get("/healthz",
          [this, send](const httplib::Request&, httplib::Response& res) {
            send(res, handle_health());
          });
  if (!options_.ui_dir.empty()) {
    srv.set_mount_point("/", options_.ui_dir.string());
  }
  srv.set_error_handler([this](const httplib::Request&, httplib::Response& res) {
    res.set_header("X-Model-Hash", predictor_.model_hash());
    if (res.status == 413) {
      json body{{"error", "request body exceeds 1 MiB"},
                {"model_hash", predictor_.model_hash()},
                {"disclaimer", kDisclaimer}};
      res.set_content(body.dump() + "\n", "application/json");
    }
  });
  srv.set_exception_handler(
      [this](const httplib::Request&, httplib::Response& res,
             std::exception_ptr) {
        res.status = 500;
        json body{{"error", "internal error"},
                  {"model_hash", predictor_.model_hash()},
                  {"disclaimer", kDisclaimer}};
        res.set_content(body.dump() + "\n", "application/json");
      });

  if (port == 0) return srv.bind_to_any_port(address);
  return srv.bind_to_port(address, port) ? port : -1;
}

bool Service::listen_after_bind() { return http_->server.listen_after_bind(); }

bool Service::serve(const std::string& address, int port) {
  if (bind(address, port) < 0) {
    throw UsageError("cannot bind " + address + ":" + std::to_string(port));
  }
  return listen_after_bind();
}

void Service::stop() {
  if (http_ && http_->server.is_running()) http_->server.stop();
}

}  // namespace lexsent

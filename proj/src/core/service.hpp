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

#ifndef LEXSENT_CORE_SERVICE_HPP_
#define LEXSENT_CORE_SERVICE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "core/pipeline.hpp"

namespace lexsent {

inline constexpr std::size_t kMaxRequestBytes = 1 << 20;
inline constexpr std::size_t kDefaultContributionCount = 10;
inline constexpr std::size_t kDefaultRankingCount = 25;
inline constexpr const char* kDisclaimer =
    "research prototype; not legal advice";

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

struct ServiceOptions {
  std::filesystem::path ui_dir;  // served at GET / when set
};

// JSON API over one immutable model:
//
//   POST /api/v1/predict          {"text": "...", "k": 10}
//   GET  /api/v1/explain/global?k=25
//   GET  /api/v1/model
//   GET  /healthz
//
// Every JSON body carries model_hash and disclaimer; every reply carries an
// X-Model-Hash header. The handle_* members are the transport-free request
// handlers; serve() wires them to HTTP.
class Service {
 public:
  explicit Service(Predictor predictor, ServiceOptions options = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  HttpReply handle_predict(std::string_view body) const;
  HttpReply handle_global(std::optional<std::string_view> k) const;
  HttpReply handle_model_summary() const;
  HttpReply handle_health() const;

  // Binds and returns the port (an ephemeral one when port == 0), or -1.
  int bind(const std::string& address, int port);
  // Blocks until stop().
  bool listen_after_bind();
  bool serve(const std::string& address, int port);
  void stop();

  const Predictor& predictor() const { return predictor_; }

 private:
  class Http;

  const Predictor predictor_;
  const ServiceOptions options_;
  std::unique_ptr<Http> http_;
};

}  // namespace lexsent

#endif  // LEXSENT_CORE_SERVICE_HPP_

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

#include "lexsent/lexsent.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/pipeline.hpp"
#include "core/service.hpp"
#include "core/synth.hpp"

struct lexsent_config {
  lexsent::PipelineConfig config;
};

struct lexsent_model {
  lexsent::Predictor predictor;
};

namespace {

thread_local std::string g_last_error;

lexsent_status fail(lexsent_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Fn>
lexsent_status guarded(Fn&& body) {
  try {
    g_last_error.clear();
    body();
    return LEXSENT_OK;
  } catch (const lexsent::UsageError& e) {
    return fail(LEXSENT_ERR_USAGE, e.what());
  } catch (const lexsent::DataError& e) {
    return fail(LEXSENT_ERR_DATA, e.what());
  } catch (const lexsent::TrainingError& e) {
    return fail(LEXSENT_ERR_TRAINING, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LEXSENT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LEXSENT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LEXSENT_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw lexsent::UsageError(std::string(name) + " must not be NULL");
  }
}

lexsent::OutputFormat to_format(lexsent_format f) {
  switch (f) {
    case LEXSENT_FORMAT_CSV:
      return lexsent::OutputFormat::kCsv;
    case LEXSENT_FORMAT_JSON:
      return lexsent::OutputFormat::kJson;
  }
  throw lexsent::UsageError("unknown output format");
}

}  // namespace

extern "C" {

const char* lexsent_version(void) { return "1.0.0"; }

const char* lexsent_last_error(void) { return g_last_error.c_str(); }

void lexsent_string_free(char* s) { std::free(s); }

lexsent_status lexsent_config_create(lexsent_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lexsent_config{};
  });
}

void lexsent_config_destroy(lexsent_config* config) { delete config; }

lexsent_status lexsent_config_set(lexsent_config* config, const char* key,
                                  const char* value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    lexsent::apply_setting(config->config, key, value);
  });
}

lexsent_status lexsent_config_load_file(lexsent_config* config,
                                        const char* path) {
  return guarded([&] {
    require(config, "config");
    require(path, "path");
    lexsent::load_config_file(config->config, path);
  });
}

lexsent_status lexsent_config_to_json(const lexsent_config* config,
                                      char** out_json) {
  return guarded([&] {
    require(config, "config");
    require(out_json, "out_json");
    *out_json = dup_string(lexsent::to_json(config->config).dump(2) + "\n");
  });
}

lexsent_status lexsent_train(const lexsent_config* config,
                             const char* corpus_dir, const char* labels_path,
                             const char* model_out,
                             lexsent_format scatter_format,
                             char** out_metrics_json) {
  return guarded([&] {
    require(config, "config");
    require(corpus_dir, "corpus_dir");
    require(model_out, "model_out");
    lexsent::TrainPaths paths;
    paths.corpus_dir = corpus_dir;
    if (labels_path != nullptr) paths.labels = labels_path;
    paths.model_out = model_out;
    const auto result =
        lexsent::run_training(config->config, paths, to_format(scatter_format));
    if (out_metrics_json != nullptr) {
      *out_metrics_json = dup_string(result.metrics_json);
    }
  });
}

lexsent_status lexsent_model_load(const char* path, lexsent_model** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new lexsent_model{lexsent::Predictor::from_file(path)};
  });
}

void lexsent_model_free(lexsent_model* model) { delete model; }

lexsent_status lexsent_model_predict(const lexsent_model* model,
                                     const char* text, double* out_months) {
  return guarded([&] {
    require(model, "model");
    require(text, "text");
    require(out_months, "out_months");
    *out_months = model->predictor.predict(text);
  });
}

lexsent_status lexsent_model_explain_text(const lexsent_model* model,
                                          const char* text, size_t k,
                                          lexsent_format format, char** out) {
  return guarded([&] {
    require(model, "model");
    require(text, "text");
    require(out, "out");
    const auto result = model->predictor.explain(text, k);
    *out = dup_string(to_format(format) == lexsent::OutputFormat::kJson
                          ? lexsent::explanation_json(result.explanation)
                          : lexsent::explanation_csv(result.explanation));
  });
}

lexsent_status lexsent_model_global_ranking(const lexsent_model* model,
                                            size_t k, lexsent_format format,
                                            char** out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    if (k == 0) throw lexsent::UsageError("k must be >= 1");
    const auto ranking = model->predictor.ranking(k);
    *out = dup_string(to_format(format) == lexsent::OutputFormat::kJson
                          ? lexsent::ranking_json(ranking)
                          : lexsent::ranking_csv(ranking));
  });
}

lexsent_status lexsent_model_summary(const lexsent_model* model,
                                     char** out_json) {
  return guarded([&] {
    require(model, "model");
    require(out_json, "out_json");
    lexsent::Service service(model->predictor);
    *out_json = dup_string(service.handle_model_summary().body);
  });
}

const char* lexsent_model_hash(const lexsent_model* model) {
  return model == nullptr ? "" : model->predictor.model_hash().c_str();
}

lexsent_status lexsent_render_months(double months, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(lexsent::render_months(months));
  });
}

int lexsent_months_out_of_range(double months) {
  return lexsent::outside_observed_range(months) ? 1 : 0;
}

void lexsent_synth_default_params(lexsent_synth_params* params) {
  if (params == nullptr) return;
  const lexsent::SynthParams d;
  params->n_docs = d.n_docs;
  params->vocab_size = d.vocab_size;
  params->sparsity = d.sparsity;
  params->noise_sigma = d.noise_sigma;
  params->seed = d.seed;
}

lexsent_status lexsent_synth(const lexsent_synth_params* params,
                             const char* out_dir) {
  return guarded([&] {
    require(params, "params");
    require(out_dir, "out_dir");
    lexsent::SynthParams p;
    p.n_docs = params->n_docs;
    p.vocab_size = params->vocab_size;
    p.sparsity = params->sparsity;
    p.noise_sigma = params->noise_sigma;
    p.seed = params->seed;
    lexsent::write_synthetic_corpus(lexsent::generate_synthetic_corpus(p),
                                    out_dir);
  });
}

lexsent_status lexsent_serve(const lexsent_model* model,
                             const char* bind_address, int port,
                             const char* ui_dir) {
  return guarded([&] {
    require(model, "model");
    require(bind_address, "bind_address");
    if (port < 0 || port > 65535) throw lexsent::UsageError("invalid port");
    lexsent::ServiceOptions options;
    if (ui_dir != nullptr) options.ui_dir = ui_dir;
    lexsent::Service service(model->predictor, options);
    if (!service.serve(bind_address, port)) {
      throw lexsent::DataError("HTTP server stopped unexpectedly");
    }
  });
}

}  // extern "C"

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

#ifndef LEXSENT_LEXSENT_H_
#define LEXSENT_LEXSENT_H_

/* C interface to the lexsent sentence-length regression toolkit.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a lexsent_status; on failure, lexsent_last_error()
 * describes the problem for the calling thread. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * lexsent_string_free(). Loaded models are immutable and may be shared
 * between threads. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LEXSENT_BUILDING_LIBRARY)
#define LEXSENT_API __declspec(dllexport)
#else
#define LEXSENT_API __declspec(dllimport)
#endif
#else
#define LEXSENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum lexsent_status {
  LEXSENT_OK = 0,
  LEXSENT_ERR_USAGE = 1,    /* bad argument or configuration value */
  LEXSENT_ERR_DATA = 2,     /* missing/malformed corpus, labels or model */
  LEXSENT_ERR_TRAINING = 3, /* optimisation failed */
  LEXSENT_ERR_INTERNAL = 4
} lexsent_status;

typedef enum lexsent_format {
  LEXSENT_FORMAT_CSV = 0,
  LEXSENT_FORMAT_JSON = 1
} lexsent_format;

typedef struct lexsent_config lexsent_config;
typedef struct lexsent_model lexsent_model;

LEXSENT_API const char* lexsent_version(void);

/* Message for the most recent failure on this thread ("" if none). */
LEXSENT_API const char* lexsent_last_error(void);

LEXSENT_API void lexsent_string_free(char* s);

/* ---- configuration ----------------------------------------------------- */

/* Defaults: epsilon 0.1, alpha 0.001, 2000 epochs, 65/10/25 split, 1-3
 * grams, min_df 3, max_df_ratio 0.9, built-in stop words. */
LEXSENT_API lexsent_status lexsent_config_create(lexsent_config** out);
LEXSENT_API void lexsent_config_destroy(lexsent_config* config);

/* Applies one "key = value" setting (same keys as config files). */
LEXSENT_API lexsent_status lexsent_config_set(lexsent_config* config,
                                              const char* key,
                                              const char* value);
LEXSENT_API lexsent_status lexsent_config_load_file(lexsent_config* config,
                                                    const char* path);
LEXSENT_API lexsent_status lexsent_config_to_json(const lexsent_config* config,
                                                  char** out_json);

/* ---- training ---------------------------------------------------------- */

/* Trains on corpus_dir (*.txt plus labels.csv, or labels_path when not
 * NULL) and writes model_out plus .metrics.json, .manifest.json and a
 * test-set scatter file (.scatter.csv or .scatter.json) next to it. The
 * metrics JSON is returned through out_metrics_json when not NULL. No model
 * file is written on failure. */
LEXSENT_API lexsent_status lexsent_train(const lexsent_config* config,
                                         const char* corpus_dir,
                                         const char* labels_path,
                                         const char* model_out,
                                         lexsent_format scatter_format,
                                         char** out_metrics_json);

/* ---- inference --------------------------------------------------------- */

LEXSENT_API lexsent_status lexsent_model_load(const char* path,
                                              lexsent_model** out);
LEXSENT_API void lexsent_model_free(lexsent_model* model);

/* Cleans raw decision text with the model's stored rules and predicts the
 * sentence in months. Never clamped. */
LEXSENT_API lexsent_status lexsent_model_predict(const lexsent_model* model,
                                                 const char* text,
                                                 double* out_months);

/* Per-document breakdown, top k contributions (k = 0 for all). */
LEXSENT_API lexsent_status lexsent_model_explain_text(
    const lexsent_model* model, const char* text, size_t k,
    lexsent_format format, char** out);

/* Up to k phrases per sign ranked by weight * idf. */
LEXSENT_API lexsent_status lexsent_model_global_ranking(
    const lexsent_model* model, size_t k, lexsent_format format, char** out);

/* Vocabulary size, metrics and configuration as JSON. */
LEXSENT_API lexsent_status lexsent_model_summary(const lexsent_model* model,
                                                 char** out_json);

/* Content fingerprint of the loaded model file. Owned by the model. */
LEXSENT_API const char* lexsent_model_hash(const lexsent_model* model);

/* "23 months (1 year 11 months)" */
LEXSENT_API lexsent_status lexsent_render_months(double months, char** out);

/* 1 when months is negative or above 174 (14.5 years), else 0. */
LEXSENT_API int lexsent_months_out_of_range(double months);

/* ---- synthetic corpora -------------------------------------------------- */

typedef struct lexsent_synth_params {
  size_t n_docs;
  size_t vocab_size;
  double sparsity;
  double noise_sigma;
  uint64_t seed;
} lexsent_synth_params;

/* 300 docs, 30 phrases, sparsity 0.3, noise sigma 1, seed 0. */
LEXSENT_API void lexsent_synth_default_params(lexsent_synth_params* params);

/* Writes one <id>.txt per document, labels.csv and ground_truth.json. */
LEXSENT_API lexsent_status lexsent_synth(const lexsent_synth_params* params,
                                         const char* out_dir);

/* ---- HTTP service ------------------------------------------------------- */

/* Serves the model until the process is terminated. ui_dir may be NULL. */
LEXSENT_API lexsent_status lexsent_serve(const lexsent_model* model,
                                         const char* bind_address, int port,
                                         const char* ui_dir);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* LEXSENT_LEXSENT_H_ */

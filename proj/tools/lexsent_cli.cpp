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

// lexsent command-line tool: train, predict, explain, synth, serve.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 training failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexsent/lexsent.h"

namespace {

struct ModelCloser {
  void operator()(lexsent_model* m) const { lexsent_model_free(m); }
};
struct ConfigCloser {
  void operator()(lexsent_config* c) const { lexsent_config_destroy(c); }
};
struct StringCloser {
  void operator()(char* s) const { lexsent_string_free(s); }
};
using ModelPtr = std::unique_ptr<lexsent_model, ModelCloser>;
using ConfigPtr = std::unique_ptr<lexsent_config, ConfigCloser>;
using OwnedString = std::unique_ptr<char, StringCloser>;

int exit_code(lexsent_status status) {
  return status == LEXSENT_ERR_INTERNAL ? 3 : static_cast<int>(status);
}

int report(lexsent_status status) {
  if (status != LEXSENT_OK) {
    std::cerr << "error: " << lexsent_last_error() << "\n";
  }
  return exit_code(status);
}

struct GlobalOptions {
  std::optional<unsigned long long> seed;
  std::string config_file;
  std::string format = "csv";
  std::string out;
};

lexsent_format format_of(const GlobalOptions& g) {
  return g.format == "json" ? LEXSENT_FORMAT_JSON : LEXSENT_FORMAT_CSV;
}

std::optional<std::string> read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lexsent_status load_model(const std::string& path, ModelPtr& model) {
  lexsent_model* raw = nullptr;
  const auto status = lexsent_model_load(path.c_str(), &raw);
  model.reset(raw);
  return status;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
}

std::string metrics_line(const nlohmann::json& m) {
  char buf[160];
  const auto& r2 = m.at("r_squared");
  if (r2.is_string()) {
    std::snprintf(buf, sizeof(buf), "MAE %.4f months  R^2 undefined  (n=%zu)",
                  m.at("mae").get<double>(), m.at("n").get<std::size_t>());
  } else {
    std::snprintf(buf, sizeof(buf), "MAE %.4f months  R^2 %.4f  (n=%zu)",
                  m.at("mae").get<double>(), r2.get<double>(),
                  m.at("n").get<std::size_t>());
  }
  return buf;
}

int cmd_train(const GlobalOptions& g, const std::string& corpus,
              const std::string& labels,
              const std::vector<std::string>& settings) {
  if (g.out.empty()) {
    std::cerr << "error: train requires --out <model.json>\n";
    return 1;
  }
  lexsent_config* raw = nullptr;
  if (auto s = lexsent_config_create(&raw); s != LEXSENT_OK) return report(s);
  ConfigPtr config(raw);
  if (!g.config_file.empty()) {
    if (auto s = lexsent_config_load_file(config.get(), g.config_file.c_str());
        s != LEXSENT_OK) {
      return report(s);
    }
  }
  for (const auto& kv : settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --set expects key=value, got '" << kv << "'\n";
      return 1;
    }
    const auto key = kv.substr(0, eq);
    const auto value = kv.substr(eq + 1);
    if (auto s = lexsent_config_set(config.get(), key.c_str(), value.c_str());
        s != LEXSENT_OK) {
      return report(s);
    }
  }
  if (g.seed) {
    const auto seed = std::to_string(*g.seed);
    if (auto s = lexsent_config_set(config.get(), "seed", seed.c_str());
        s != LEXSENT_OK) {
      return report(s);
    }
  }

  char* metrics_raw = nullptr;
  const auto status = lexsent_train(config.get(), corpus.c_str(),
                                    labels.empty() ? nullptr : labels.c_str(),
                                    g.out.c_str(), format_of(g), &metrics_raw);
  if (status != LEXSENT_OK) return report(status);
  OwnedString metrics_text(metrics_raw);
  const auto metrics = nlohmann::json::parse(metrics_text.get());
  std::cout << "model written to " << g.out << "\n";
  std::cout << "vocabulary " << metrics.at("vocabulary_size").get<std::size_t>()
            << " n-grams, " << metrics.at("nonzero_weights").get<std::size_t>()
            << " non-zero weights, " << metrics.at("epochs_run").get<int>()
            << " epochs"
            << (metrics.at("stopped_early").get<bool>() ? " (early stop)" : "")
            << "\n";
  for (const char* split : {"train", "val", "test"}) {
    std::printf("%-5s  %s\n", split, metrics_line(metrics.at(split)).c_str());
  }
  return 0;
}

int cmd_predict(const GlobalOptions& g, const std::string& model_path,
                const std::string& text_path) {
  ModelPtr model;
  if (auto s = load_model(model_path, model); s != LEXSENT_OK) return report(s);
  const auto text = read_input(text_path);
  if (!text) {
    std::cerr << "error: cannot read " << text_path << "\n";
    return 2;
  }
  double months = 0.0;
  if (auto s = lexsent_model_predict(model.get(), text->c_str(), &months);
      s != LEXSENT_OK) {
    return report(s);
  }
  char* display_raw = nullptr;
  if (auto s = lexsent_render_months(months, &display_raw); s != LEXSENT_OK) {
    return report(s);
  }
  OwnedString display(display_raw);
  const bool out_of_range = lexsent_months_out_of_range(months) != 0;

  if (format_of(g) == LEXSENT_FORMAT_JSON) {
    nlohmann::json j{{"predicted_months", months},
                     {"predicted_display", display.get()},
                     {"out_of_range", out_of_range},
                     {"model_hash", lexsent_model_hash(model.get())}};
    emit(j.dump(2), g.out);
    return 0;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", months);
  std::string out = std::string("predicted_months: ") + buf + "\n" +
                    display.get() + "\n";
  if (out_of_range) {
    out += "warning: prediction lies outside the observed 0-174 month "
           "(0-14.5 year) range\n";
  }
  emit(out, g.out);
  return 0;
}

int cmd_explain(const GlobalOptions& g, const std::string& model_path,
                const std::string& text_path, std::size_t k) {
  ModelPtr model;
  if (auto s = load_model(model_path, model); s != LEXSENT_OK) return report(s);
  char* raw = nullptr;
  lexsent_status status;
  if (text_path.empty()) {
    status = lexsent_model_global_ranking(model.get(), k, format_of(g), &raw);
  } else {
    const auto text = read_input(text_path);
    if (!text) {
      std::cerr << "error: cannot read " << text_path << "\n";
      return 2;
    }
    status = lexsent_model_explain_text(model.get(), text->c_str(), k,
                                        format_of(g), &raw);
  }
  if (status != LEXSENT_OK) return report(status);
  OwnedString out(raw);
  emit(out.get(), g.out);
  return 0;
}

int cmd_synth(const GlobalOptions& g, lexsent_synth_params params) {
  if (g.out.empty()) {
    std::cerr << "error: synth requires --out <dir>\n";
    return 1;
  }
  if (g.seed) params.seed = *g.seed;
  if (auto s = lexsent_synth(&params, g.out.c_str()); s != LEXSENT_OK) {
    return report(s);
  }
  std::cout << "wrote " << params.n_docs << " documents, labels.csv and "
            << "ground_truth.json to " << g.out << "\n";
  return 0;
}

int cmd_serve(const std::string& model_path, const std::string& bind, int port,
              const std::string& ui_dir) {
  ModelPtr model;
  if (auto s = load_model(model_path, model); s != LEXSENT_OK) return report(s);
  std::cout << "serving " << model_path << " on http://" << bind << ":" << port
            << " (model " << lexsent_model_hash(model.get()) << ")"
            << std::endl;
  return report(lexsent_serve(model.get(), bind.c_str(), port,
                              ui_dir.empty() ? nullptr : ui_dir.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexsent: explainable sentence-length prediction from "
               "court decision text"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed (split, SGD order, synth)");
  app.add_option("--config", g.config_file, "Key-value config file")
      ->check(CLI::ExistingFile);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out,
                 "Output path (model file, corpus dir or report file)");

  auto* train = app.add_subcommand("train", "Train a model on a corpus");
  std::string corpus;
  std::string labels;
  std::vector<std::string> settings;
  train->add_option("--corpus", corpus, "Directory of .txt decisions")
      ->required();
  train->add_option("--labels", labels,
                    "Labels CSV (default <corpus>/labels.csv)");
  train->add_option("--set", settings, "Override a config key (key=value)");

  auto* predict = app.add_subcommand("predict", "Predict a sentence length");
  std::string model_path;
  std::string text_path;
  predict->add_option("--model", model_path, "Model file")->required();
  predict->add_option("--text", text_path, "Decision text file (default stdin)");

  auto* explain =
      app.add_subcommand("explain", "Global rankings or per-document report");
  std::size_t k = 25;
  explain->add_option("--model", model_path, "Model file")->required();
  explain->add_option("--text", text_path,
                      "Explain this document instead of the global ranking");
  explain->add_option("-k,--top", k, "Phrases per list")
      ->check(CLI::PositiveNumber);

  auto* synth = app.add_subcommand("synth", "Write a synthetic corpus");
  lexsent_synth_params params;
  lexsent_synth_default_params(&params);
  synth->add_option("--n-docs", params.n_docs, "Number of documents");
  synth->add_option("--vocab-size", params.vocab_size, "Planted phrases");
  synth->add_option("--sparsity", params.sparsity,
                    "Fraction of phrases with non-zero weight");
  synth->add_option("--noise-sigma", params.noise_sigma,
                    "Label noise standard deviation (months)");

  auto* serve = app.add_subcommand("serve", "Run the HTTP prediction service");
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::string ui_dir;
  serve->add_option("--model", model_path, "Model file")->required();
  serve->add_option("--bind", bind, "Bind address");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--ui-dir", ui_dir, "Static UI build served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  if (train->parsed()) return cmd_train(g, corpus, labels, settings);
  if (predict->parsed()) return cmd_predict(g, model_path, text_path);
  if (explain->parsed()) return cmd_explain(g, model_path, text_path, k);
  if (synth->parsed()) return cmd_synth(g, params);
  if (serve->parsed()) return cmd_serve(model_path, bind, port, ui_dir);
  return 1;
}

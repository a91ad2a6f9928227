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

#ifndef LEXSENT_CORE_SGD_REGRESSOR_HPP_
#define LEXSENT_CORE_SGD_REGRESSOR_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "core/ngram_features.hpp"

namespace lexsent {

struct TrainConfig {
  double epsilon = 0.1;  // half-width of the zero-loss tube, in months
  double alpha = 0.001;  // L1 strength
  int max_epochs = 2000;
  double eta0 = 0.01;
  double power_t = 0.25;
  int early_stop_patience = 5;
  double early_stop_tol = 1e-3;
  std::uint64_t seed = 0;
};

void validate(const TrainConfig& config);

struct Example {
  SparseVector x;
  double months = 0.0;
};

struct LinearModel {
  std::vector<double> weights;
  double intercept = 0.0;
  TrainConfig config;
  int epochs_run = 0;
  bool stopped_early = false;
};

// r_squared is -infinity when the targets have zero variance and the
// residuals do not all vanish (R^2 undefined).
struct EvalMetrics {
  double mae = 0.0;
  double r_squared = 0.0;
  std::size_t n = 0;
};

inline constexpr double kUndefinedRSquared =
    -std::numeric_limits<double>::infinity();

// max(0, |y - p| - epsilon)^2
double loss(double y, double p, double epsilon);

// d loss / d p: 0 inside the tube, else 2 (|y - p| - epsilon) sign(p - y).
double loss_gradient(double y, double p, double epsilon);

struct EpochReport {
  int epoch = 0;
  double val_mae = 0.0;
};

using EpochObserver = std::function<void(const EpochReport&)>;

// Sequential SGD with inverse-scaling step size, cumulative-penalty L1 on the
// weights (not the intercept) and early stopping on validation MAE. Returns
// the weights of the best validation epoch. The observer, if any, sees every
// completed epoch.
LinearModel train(std::span<const Example> train_set,
                  std::span<const Example> val_set, std::size_t dim,
                  const TrainConfig& config,
                  const EpochObserver& observer = {});

double predict(const LinearModel& model, const SparseVector& x);

EvalMetrics evaluate(const LinearModel& model,
                     std::span<const Example> data);

std::size_t count_nonzero(const LinearModel& model);

}  // namespace lexsent

#endif  // LEXSENT_CORE_SGD_REGRESSOR_HPP_

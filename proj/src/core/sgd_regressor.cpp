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

#include "core/sgd_regressor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "core/error.hpp"
#include "core/random.hpp"

namespace lexsent {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DataError(std::string("non-finite ") + what);
  }
}

void check_examples(std::span<const Example> data, std::size_t dim,
                    const char* name) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& ex = data[i];
    if (ex.x.dimension() != dim) {
      throw DataError(std::string(name) + " example " + std::to_string(i) +
                      " has dimension " + std::to_string(ex.x.dimension()) +
                      ", expected " + std::to_string(dim));
    }
    if (!std::isfinite(ex.months)) {
      throw DataError(std::string(name) + " example " + std::to_string(i) +
                      " has a non-finite label");
    }
    for (const auto& e : ex.x.entries()) {
      if (!std::isfinite(e.value)) {
        throw DataError(std::string(name) + " example " + std::to_string(i) +
                        " has a non-finite feature value");
      }
    }
  }
}

// Cumulative L1 penalty (Tsuruoka, Tsujii and Ananiadou 2009). total is the
// penalty every weight could have received so far; applied[i] is what weight
// i actually received. Clipping stops at zero, never crossing sign.
class CumulativeL1 {
 public:
  explicit CumulativeL1(std::size_t dim) : applied_(dim, 0.0) {}

  void accrue(double amount) { total_ += amount; }

  void apply(std::vector<double>& w, std::uint32_t i) {
    const double before = w[i];
    if (before > 0.0) {
      w[i] = std::max(0.0, before - (total_ + applied_[i]));
    } else if (before < 0.0) {
      w[i] = std::min(0.0, before + (total_ - applied_[i]));
    }
    applied_[i] += w[i] - before;
  }

 private:
  double total_ = 0.0;
  std::vector<double> applied_;
};

double mean_absolute_error(const LinearModel& model,
                           std::span<const Example> data) {
  double sum = 0.0;
  for (const auto& ex : data) sum += std::abs(ex.months - predict(model, ex.x));
  return sum / static_cast<double>(data.size());
}

}  // namespace

void validate(const TrainConfig& c) {
  if (!(c.epsilon >= 0.0) || !std::isfinite(c.epsilon)) {
    throw UsageError("epsilon must be >= 0");
  }
  if (!(c.alpha >= 0.0) || !std::isfinite(c.alpha)) {
    throw UsageError("alpha must be >= 0");
  }
  if (c.max_epochs < 1) throw UsageError("max_epochs must be >= 1");
  if (!(c.eta0 > 0.0) || !std::isfinite(c.eta0)) {
    throw UsageError("eta0 must be > 0");
  }
  if (!std::isfinite(c.power_t)) throw UsageError("power_t must be finite");
  if (c.early_stop_patience < 1) {
    throw UsageError("early_stop_patience must be >= 1");
  }
  if (!(c.early_stop_tol >= 0.0)) {
    throw UsageError("early_stop_tol must be >= 0");
  }
}

double loss(double y, double p, double epsilon) {
  require_finite(y, "target");
  require_finite(p, "prediction");
  require_finite(epsilon, "epsilon");
  const double excess = std::max(0.0, std::abs(y - p) - epsilon);
  return excess * excess;
}

double loss_gradient(double y, double p, double epsilon) {
  require_finite(y, "target");
  require_finite(p, "prediction");
  require_finite(epsilon, "epsilon");
  const double excess = std::abs(y - p) - epsilon;
  if (excess <= 0.0) return 0.0;
  return p > y ? 2.0 * excess : -2.0 * excess;
}

LinearModel train(std::span<const Example> train_set,
                  std::span<const Example> val_set, std::size_t dim,
                  const TrainConfig& config, const EpochObserver& observer) {
  validate(config);
  if (train_set.empty()) throw DataError("training set is empty");
  if (val_set.empty()) throw DataError("validation set is empty");
  check_examples(train_set, dim, "training");
  check_examples(val_set, dim, "validation");

  LinearModel model;
  model.weights.assign(dim, 0.0);
  model.config = config;

  CumulativeL1 l1(dim);
  Rng rng(config.seed);
  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  LinearModel best = model;
  double best_mae = std::numeric_limits<double>::infinity();
  // Patience counts epochs that fail to beat this reference by the
  // tolerance; best tracks the plain minimum so the returned model is never
  // worse on validation than any epoch seen.
  double patience_ref = std::numeric_limits<double>::infinity();
  int stale_epochs = 0;
  std::uint64_t t = 0;

  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (const std::size_t idx : order) {
      const Example& ex = train_set[idx];
      ++t;
      const double eta =
          config.eta0 / std::pow(static_cast<double>(t), config.power_t);
      const double p = predict(model, ex.x);
      if (!std::isfinite(p)) {
        throw TrainingError("training diverged at epoch " +
                            std::to_string(epoch) + ": non-finite prediction");
      }
      const double g = loss_gradient(ex.months, p, config.epsilon);
      if (g != 0.0) {
        for (const auto& e : ex.x.entries()) {
          model.weights[e.index] -= eta * g * e.value;
        }
        model.intercept -= eta * g;
      }
      if (config.alpha > 0.0) {
        l1.accrue(eta * config.alpha);
        for (const auto& e : ex.x.entries()) l1.apply(model.weights, e.index);
      }
    }
    model.epochs_run = epoch;

    if (!std::isfinite(model.intercept) ||
        !std::all_of(model.weights.begin(), model.weights.end(),
                     [](double w) { return std::isfinite(w); })) {
      throw TrainingError("training diverged at epoch " +
                          std::to_string(epoch) + ": non-finite weights");
    }

    const double val_mae = mean_absolute_error(model, val_set);
    if (observer) observer({epoch, val_mae});
    if (val_mae < best_mae) {
      best_mae = val_mae;
      best = model;
    }
    if (val_mae < patience_ref - config.early_stop_tol) {
      patience_ref = val_mae;
      stale_epochs = 0;
    } else if (++stale_epochs >= config.early_stop_patience) {
      best.epochs_run = epoch;
      best.stopped_early = true;
      return best;
    }
  }
  best.epochs_run = model.epochs_run;
  best.stopped_early = false;
  return best;
}

double predict(const LinearModel& model, const SparseVector& x) {
  if (x.dimension() != model.weights.size()) {
    throw DataError("feature dimension " + std::to_string(x.dimension()) +
                    " does not match model dimension " +
                    std::to_string(model.weights.size()));
  }
  double p = model.intercept;
  for (const auto& e : x.entries()) p += model.weights[e.index] * e.value;
  return p;
}

EvalMetrics evaluate(const LinearModel& model,
                     std::span<const Example> data) {
  if (data.empty()) throw DataError("cannot evaluate on an empty dataset");
  const double n = static_cast<double>(data.size());
  double mean_y = 0.0;
  for (const auto& ex : data) mean_y += ex.months;
  mean_y /= n;

  double abs_sum = 0.0;
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (const auto& ex : data) {
    const double r = ex.months - predict(model, ex.x);
    abs_sum += std::abs(r);
    ss_res += r * r;
    ss_tot += (ex.months - mean_y) * (ex.months - mean_y);
  }
  EvalMetrics m;
  m.n = data.size();
  m.mae = abs_sum / n;
  if (ss_tot > 0.0) {
    m.r_squared = 1.0 - ss_res / ss_tot;
  } else {
    m.r_squared = ss_res == 0.0 ? 1.0 : kUndefinedRSquared;
  }
  return m;
}

std::size_t count_nonzero(const LinearModel& model) {
  return static_cast<std::size_t>(
      std::count_if(model.weights.begin(), model.weights.end(),
                    [](double w) { return w != 0.0; }));
}

}  // namespace lexsent

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
#include <limits>

#include "core/error.hpp"
#include "core/random.hpp"
#include "doctest.h"
#include "unit/planted.hpp"

using namespace lexsent;

namespace {

const planted::Dataset& planted_data() {
  static const planted::Dataset d = planted::make();
  return d;
}

std::vector<Example> random_examples(Rng& rng, std::size_t n, std::size_t dim,
                                     double target, bool include_zero) {
  std::vector<Example> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseEntry> entries;
    if (!(include_zero && i == 0)) {
      for (std::uint32_t j = 0; j < dim; ++j) {
        if (rng.uniform_below(4) == 0) {
          entries.push_back({j, 0.05 + 0.5 * rng.uniform01()});
        }
      }
    }
    out.push_back({SparseVector::from_entries(dim, entries), target});
  }
  return out;
}

double mean_loss(const LinearModel& m, const std::vector<Example>& data,
                 double eps) {
  double s = 0;
  for (const auto& ex : data) s += loss(ex.months, predict(m, ex.x), eps);
  return s / static_cast<double>(data.size());
}

}  // namespace

TEST_CASE("loss examples") {
  CHECK(loss(5, 5.05, 0.1) == 0.0);
  CHECK(loss(5, 6, 0.1) == 0.81);
  CHECK(loss(5, 5, 0) == 0.0);
  CHECK(loss(5, 4, 0.1) == 0.81);
  CHECK_THROWS_AS(loss(std::nan(""), 1, 0.1), DataError);
  CHECK_THROWS_AS(loss(1, std::numeric_limits<double>::infinity(), 0.1),
                  DataError);
}

TEST_CASE("loss_gradient examples") {
  CHECK(loss_gradient(5, 5.05, 0.1) == 0.0);
  CHECK(loss_gradient(5, 6, 0.1) == doctest::Approx(1.8).epsilon(1e-12));
  CHECK(loss_gradient(5, 4, 0.1) == doctest::Approx(-1.8).epsilon(1e-12));
  CHECK_THROWS_AS(loss_gradient(1, 1, std::nan("")), DataError);
}

TEST_CASE("loss_gradient agrees with central finite differences") {
  Rng rng(42);
  const double h = 1e-6;
  int checked = 0;
  while (checked < 1000) {
    const double y = -100 + 200 * rng.uniform01();
    const double p = -100 + 200 * rng.uniform01();
    const double eps = 5 * rng.uniform01();
    if (std::abs(std::abs(y - p) - eps) <= 1e-3) continue;
    const double fd = (loss(y, p + h, eps) - loss(y, p - h, eps)) / (2 * h);
    const double g = loss_gradient(y, p, eps);
    const double scale = std::max(1.0, std::abs(g));
    CHECK(std::abs(fd - g) <= 1e-5 * scale);
    ++checked;
  }
}

TEST_CASE("predict") {
  LinearModel m;
  m.weights = {2.0, -1.0};
  m.intercept = 10;
  CHECK(predict(m, SparseVector::from_entries(2, {{0, 3.0}})) == 16.0);
  CHECK(predict(m, SparseVector(2)) == 10.0);
  LinearModel zero;
  zero.weights = {0.0, 0.0};
  CHECK(predict(zero, SparseVector::from_entries(2, {{1, 7.0}})) == 0.0);
  CHECK_THROWS_AS(predict(m, SparseVector(3)), DataError);
}

TEST_CASE("evaluate") {
  LinearModel m;
  m.weights = {1.0};
  const auto ex = [](double x, double y) {
    return Example{SparseVector::from_entries(1, {{0, x}}), y};
  };
  const std::vector<Example> data = {ex(12, 10), ex(18, 20), ex(33, 30)};
  const auto metrics = evaluate(m, data);
  CHECK(metrics.mae == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
  CHECK(metrics.r_squared == doctest::Approx(0.915).epsilon(1e-12));
  CHECK(metrics.n == 3);

  const std::vector<Example> perfect = {ex(10, 10), ex(20, 20)};
  CHECK(evaluate(m, perfect).mae == 0.0);
  CHECK(evaluate(m, perfect).r_squared == 1.0);

  LinearModel mean_model;
  mean_model.weights = {0.0};
  mean_model.intercept = 20;
  CHECK(evaluate(mean_model, data).r_squared == doctest::Approx(0.0));

  const std::vector<Example> flat = {ex(1, 5), ex(2, 5)};
  CHECK(evaluate(mean_model, flat).r_squared == kUndefinedRSquared);
  mean_model.intercept = 5;
  LinearModel flat_model = mean_model;
  CHECK(evaluate(flat_model, flat).r_squared == 1.0);

  CHECK_THROWS_AS(evaluate(m, std::vector<Example>{}), DataError);
}

TEST_CASE("train validates its inputs") {
  Rng rng(1);
  const auto data = random_examples(rng, 20, 4, 10, false);
  CHECK_THROWS_AS(train(data, data, 5, TrainConfig{}), DataError);
  CHECK_THROWS_AS(train({}, data, 4, TrainConfig{}), DataError);
  CHECK_THROWS_AS(train(data, {}, 4, TrainConfig{}), DataError);
  auto bad_label = data;
  bad_label[3].months = std::nan("");
  CHECK_THROWS_AS(train(bad_label, data, 4, TrainConfig{}), DataError);
  TrainConfig bad;
  bad.eta0 = 0;
  CHECK_THROWS_AS(train(data, data, 4, bad), UsageError);
  bad = {};
  bad.early_stop_patience = 0;
  CHECK_THROWS_AS(train(data, data, 4, bad), UsageError);
}

TEST_CASE("train reports divergence with the epoch") {
  Rng rng(1);
  const auto data = random_examples(rng, 20, 4, 1e6, false);
  TrainConfig cfg;
  cfg.eta0 = 10.0;
  cfg.power_t = 0.0;
  cfg.early_stop_patience = 1000;
  CHECK_THROWS_WITH_AS(train(data, data, 4, cfg), doctest::Contains("epoch"),
                       TrainingError);
}

TEST_CASE("constant targets land in the tube") {
  Rng rng(9);
  const auto data = random_examples(rng, 60, 10, 24.0, true);
  TrainConfig cfg;
  cfg.eta0 = 0.1;
  cfg.max_epochs = 5000;
  cfg.early_stop_patience = 100000;
  const auto model = train(data, data, 10, cfg);
  // The intercept approaches the lower tube edge from below.
  CHECK(model.intercept >= 23.9 - 1e-3);
  CHECK(model.intercept <= 24.1);
  CHECK(mean_loss(model, data, 0.1) < 1e-9);
  for (double w : model.weights) CHECK(std::abs(w) < 0.5);
}

TEST_CASE("an epoch inside the tube changes nothing without L1") {
  Rng rng(4);
  auto data = random_examples(rng, 30, 6, 0.0, false);
  for (auto& ex : data) ex.months = 4.9 * rng.uniform01();
  TrainConfig cfg;
  cfg.epsilon = 5.0;
  cfg.max_epochs = 1;
  for (double alpha : {0.0, 0.5}) {
    cfg.alpha = alpha;
    const auto model = train(data, data, 6, cfg);
    CHECK(model.intercept == 0.0);
    CHECK(std::all_of(model.weights.begin(), model.weights.end(),
                      [](double w) { return w == 0.0; }));
  }
}

TEST_CASE("planted model is recovered") {
  const auto& d = planted_data();
  const auto model = train(d.train, d.val, d.vocab.size(), TrainConfig{});
  const auto metrics = evaluate(model, d.test);
  CHECK(metrics.r_squared >= 0.9);
  CHECK(metrics.mae <= 2.0);
  const auto truth = planted::true_weights(d);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == 0.0) continue;
    INFO("term " << d.vocab.term(i));
    CHECK(model.weights[i] >= truth[i] - 0.15 * std::abs(truth[i]));
    CHECK(model.weights[i] <= truth[i] + 0.15 * std::abs(truth[i]));
  }
}

TEST_CASE("training is deterministic for a seed") {
  const auto& d = planted_data();
  TrainConfig cfg;
  cfg.seed = 17;
  const auto a = train(d.train, d.val, d.vocab.size(), cfg);
  const auto b = train(d.train, d.val, d.vocab.size(), cfg);
  CHECK(a.weights == b.weights);
  CHECK(a.intercept == b.intercept);
  CHECK(a.epochs_run == b.epochs_run);
  cfg.seed = 18;
  const auto c = train(d.train, d.val, d.vocab.size(), cfg);
  CHECK(a.weights != c.weights);
}

TEST_CASE("L1 sparsity is monotone in alpha and total at alpha = 10") {
  const auto& d = planted_data();
  std::size_t previous = std::numeric_limits<std::size_t>::max();
  for (double alpha : {0.0, 0.001, 0.01, 0.1}) {
    TrainConfig cfg;
    cfg.alpha = alpha;
    const auto nnz = count_nonzero(train(d.train, d.val, d.vocab.size(), cfg));
    INFO("alpha " << alpha << " nnz " << nnz);
    CHECK(nnz <= previous);
    previous = nnz;
  }
  TrainConfig heavy;
  heavy.alpha = 10.0;
  const auto model = train(d.train, d.val, d.vocab.size(), heavy);
  CHECK(count_nonzero(model) == 0);
  for (const auto& ex : d.test) CHECK(predict(model, ex.x) == model.intercept);
}

TEST_CASE("early stopping returns the best validation epoch") {
  const auto& d = planted_data();
  std::vector<EpochReport> epochs;
  const auto model = train(d.train, d.val, d.vocab.size(), TrainConfig{},
                           [&](const EpochReport& r) { epochs.push_back(r); });
  REQUIRE(!epochs.empty());
  CHECK(model.stopped_early);
  CHECK(model.epochs_run == epochs.back().epoch);
  CHECK(model.epochs_run < 2000);
  const double returned = evaluate(model, d.val).mae;
  CHECK(returned <= epochs.back().val_mae);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : epochs) best = std::min(best, r.val_mae);
  CHECK(returned == best);
}

TEST_CASE("max_epochs bounds training") {
  const auto& d = planted_data();
  TrainConfig cfg;
  cfg.max_epochs = 3;
  const auto model = train(d.train, d.val, d.vocab.size(), cfg);
  CHECK(model.epochs_run == 3);
  CHECK_FALSE(model.stopped_early);
}

TEST_CASE("scaling targets scales the model") {
  const auto& d = planted_data();
  TrainConfig cfg;
  cfg.alpha = 0.0;
  cfg.epsilon = 0.0;
  cfg.max_epochs = 400;
  cfg.early_stop_patience = 10000;
  const auto base = train(d.train, d.val, d.vocab.size(), cfg);
  const double c = 2.5;
  auto scale = [c](std::vector<Example> v) {
    for (auto& ex : v) ex.months *= c;
    return v;
  };
  const auto scaled =
      train(scale(d.train), scale(d.val), d.vocab.size(), cfg);
  CHECK(scaled.intercept == doctest::Approx(c * base.intercept).epsilon(0.01));
  for (std::size_t i = 0; i < base.weights.size(); ++i) {
    CHECK(scaled.weights[i] ==
          doctest::Approx(c * base.weights[i]).epsilon(0.01));
  }
}

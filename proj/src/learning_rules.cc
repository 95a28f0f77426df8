// Copyright 2026 The RMG Hedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rmg/learning_rules.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmg/game.h"

namespace rmg {

double UcbIndex(double mean, std::int64_t n, std::int64_t t, double c) {
  if (n == 0) return std::numeric_limits<double>::infinity();
  return mean + std::sqrt(c * std::log(static_cast<double>(t)) /
                          static_cast<double>(n));
}

MeanEstimate MeanUpdate(MeanEstimate estimate, double reward,
                        std::optional<double> window_rate) {
  if (estimate.count == 0) return {reward, 1};
  if (window_rate) {
    estimate.mean = (1.0 - *window_rate) * estimate.mean + *window_rate * reward;
  } else {
    const auto n = static_cast<double>(estimate.count);
    estimate.mean = (estimate.mean * n + reward) / (n + 1.0);
  }
  ++estimate.count;
  return estimate;
}

double EpsilonSchedule(std::int64_t t, int n_actions) {
  const double raw = 1.0 / std::sqrt(static_cast<double>(t) / n_actions);
  return std::min(1.0, raw);
}

double QTable::MaxAt(int s) const {
  double best = -std::numeric_limits<double>::infinity();
  for (double v : Row(s)) best = std::max(best, v);
  return best;
}

void QTable::Update(int s, int a, double reward, int s_next, double alpha,
                    double gamma) {
  double& q = (*this)(s, a);
  q += alpha * (reward + gamma * MaxAt(s_next) - q);
}

SatisficingStep SatisficingUpdate(double aspiration, int current_action,
                                  double reward, double lambda, int n_actions,
                                  Rng& rng) {
  int next = current_action;
  if (reward < aspiration) {
    next = rng.UniformInt(n_actions - 1);
    if (next >= current_action) ++next;
  }
  return {next, lambda * aspiration + (1.0 - lambda) * reward};
}

void Exp3Probabilities(std::span<const double> weights, double gamma,
                       std::span<double> out) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double k = static_cast<double>(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    out[j] = (1.0 - gamma) * weights[j] / total + gamma / k;
  }
}

std::vector<double> Exp3Probabilities(std::span<const double> weights,
                                      double gamma) {
  std::vector<double> p(weights.size());
  Exp3Probabilities(weights, gamma, p);
  return p;
}

void Exp3Update(std::span<double> weights, double gamma, int action,
                double reward, double p_chosen) {
  const double scaled = (reward - kMinPayoff) / (kMaxPayoff - kMinPayoff);
  const double estimate = scaled / p_chosen;
  const double k = static_cast<double>(weights.size());
  weights[action] *= std::exp(gamma * estimate / k);
  if (!(weights[action] > 0.0) || !std::isfinite(weights[action])) {
    throw std::logic_error("Exp3Update: weight left (0, inf)");
  }
}

double SecurityFallbackProbability(double security_value, std::int64_t t,
                                   double cumulative_reward, double lambda) {
  const double shortfall =
      std::max(0.0, security_value * static_cast<double>(t) - cumulative_reward);
  return std::min(1.0, lambda * shortfall);
}

int ArgmaxRandomTies(std::span<const double> values, Rng& rng) {
  int best = 0;
  int ties = 1;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) {
      best = i;
      ties = 1;
    } else if (values[i] == values[best]) {
      ++ties;
    }
  }
  if (ties == 1) return best;
  int pick = rng.UniformInt(ties);
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (values[i] == values[best] && pick-- == 0) return i;
  }
  return best;
}

}  // namespace rmg

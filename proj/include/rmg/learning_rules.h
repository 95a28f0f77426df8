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

#ifndef RMG_LEARNING_RULES_H_
#define RMG_LEARNING_RULES_H_

// Update and selection rules shared by the learning players. Kept as free
// functions so each rule can be checked against its closed form.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rmg/random.h"

namespace rmg {

// Upper-confidence index mean + sqrt(C ln t / n); +inf for an untried arm.
double UcbIndex(double mean, std::int64_t n, std::int64_t t, double c);

struct MeanEstimate {
  double mean = 0.0;
  std::int64_t count = 0;
};

// Running mean, or an exponential average with constant rate when
// `window_rate` is set. The first observation always sets the mean.
MeanEstimate MeanUpdate(MeanEstimate estimate, double reward,
                        std::optional<double> window_rate);

// min(1, 1 / sqrt(t / n_actions)).
double EpsilonSchedule(std::int64_t t, int n_actions);

// Tabular action values over a state set.
class QTable {
 public:
  QTable() = default;
  QTable(int n_states, int n_actions, double initial = 0.0)
      : n_actions_(n_actions),
        values_(static_cast<std::size_t>(n_states) * n_actions, initial) {}

  int n_actions() const { return n_actions_; }
  int n_states() const {
    return n_actions_ == 0 ? 0 : static_cast<int>(values_.size()) / n_actions_;
  }
  double operator()(int s, int a) const { return values_[Index(s, a)]; }
  double& operator()(int s, int a) { return values_[Index(s, a)]; }
  std::span<const double> Row(int s) const {
    return {values_.data() + Index(s, 0), static_cast<std::size_t>(n_actions_)};
  }
  double MaxAt(int s) const;

  // q(s,a) += alpha * (r + gamma * max_b q(s',b) - q(s,a))
  void Update(int s, int a, double reward, int s_next, double alpha,
              double gamma);

  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t Index(int s, int a) const {
    return static_cast<std::size_t>(s) * n_actions_ + a;
  }

  int n_actions_ = 0;
  std::vector<double> values_;
};

struct SatisficingStep {
  int next_action;
  double aspiration;
};

// Keep the action while the reward meets the aspiration, otherwise move to a
// uniformly drawn different action. The aspiration always relaxes toward the
// reward at rate (1 - lambda).
SatisficingStep SatisficingUpdate(double aspiration, int current_action,
                                  double reward, double lambda, int n_actions,
                                  Rng& rng);

// p_j = (1 - gamma) w_j / sum(w) + gamma / K.
void Exp3Probabilities(std::span<const double> weights, double gamma,
                       std::span<double> out);
std::vector<double> Exp3Probabilities(std::span<const double> weights,
                                      double gamma);

// Importance-weighted update of the chosen arm. Rewards are rescaled from
// [-9, 9] to [0, 1] first.
void Exp3Update(std::span<double> weights, double gamma, int action,
                double reward, double p_chosen);

// Probability of falling back to the security strategy given the shortfall
// max(0, v t - cumulative reward).
double SecurityFallbackProbability(double security_value, std::int64_t t,
                                   double cumulative_reward, double lambda);

// Index of a maximal element; ties broken uniformly with `rng`. Draws from
// `rng` only when there is a tie.
int ArgmaxRandomTies(std::span<const double> values, Rng& rng);

// Joint-action state used by the state heuristic and M3.
inline int EncodeJointState(int own_action, int opp_action, int n_actions) {
  return own_action * n_actions + opp_action;
}
inline int InitialJointState(int n_actions) { return n_actions * n_actions; }
inline int JointStateCount(int n_actions) { return n_actions * n_actions + 1; }

}  // namespace rmg

#endif  // RMG_LEARNING_RULES_H_

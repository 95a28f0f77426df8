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

#ifndef RMG_PLAYERS_H_
#define RMG_PLAYERS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rmg/game.h"
#include "rmg/learning_rules.h"
#include "rmg/random.h"

namespace rmg {

struct InformationNeeds {
  bool needs_matrix = false;
  bool needs_opponent_action = false;
  bool needs_counterfactuals = false;

  InformationNeeds operator|(const InformationNeeds& o) const {
    return {needs_matrix || o.needs_matrix,
            needs_opponent_action || o.needs_opponent_action,
            needs_counterfactuals || o.needs_counterfactuals};
  }
  bool RewardOnly() const {
    return !needs_matrix && !needs_opponent_action && !needs_counterfactuals;
  }
  friend bool operator==(const InformationNeeds&,
                         const InformationNeeds&) = default;
};

// What a player learns after a simultaneous step. Absent fields are
// std::nullopt / an empty span. When present, counterfactual_rewards[i] is the
// own payoff of action i against the opponent's actual action.
struct Observation {
  int own_action = 0;
  double reward = 0.0;
  std::optional<int> opponent_action;
  std::span<const double> counterfactual_rewards;
};

// t starts at 1 for the first decision of a match.
struct MatchClock {
  std::int64_t t = 1;
  int n_actions = 0;
};

// Game information handed to a player at init. Matrices are indexed
// [own action][opponent action] and are only present when needed.
struct GameView {
  int n_actions = 0;
  Role role = Role::kRow;
  std::optional<PayoffMatrix> own_payoffs;
  std::optional<PayoffMatrix> opponent_payoffs;
};

GameView FullGameView(const MatrixGame& game, Role role);
GameView FilterView(const GameView& view, const InformationNeeds& needs);
Observation FilterObservation(const Observation& obs,
                              const InformationNeeds& needs);

// Behavioural contract shared by every player, including hedges.
class Player {
 public:
  virtual ~Player() = default;

  virtual InformationNeeds needs() const = 0;
  // Resets all internal state.
  virtual void Init(const GameView& view, std::uint64_t seed) = 0;
  virtual int SelectAction(const MatchClock& clock) = 0;
  virtual void Observe(const Observation& obs) = 0;
  // Writes every piece of mutable state, RNG included.
  virtual void WriteState(std::ostream& os) const = 0;

  std::string StateSnapshot() const;
};

class RandomPlayer final : public Player {
 public:
  InformationNeeds needs() const override { return {}; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation&) override {}
  void WriteState(std::ostream& os) const override;

 private:
  int n_actions_ = 0;
  Rng rng_;
};

// Best response to the opponent's previous action.
class GreedyPlayer final : public Player {
 public:
  InformationNeeds needs() const override { return {true, true, false}; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

 private:
  int n_actions_ = 0;
  std::vector<std::vector<int>> best_responses_;
  std::optional<int> last_opponent_action_;
  Rng rng_;
};

class BullyPlayer final : public Player {
 public:
  InformationNeeds needs() const override { return {true, false, false}; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock&) override { return action_; }
  void Observe(const Observation&) override {}
  void WriteState(std::ostream& os) const override;

 private:
  int action_ = 0;
};

// Samples the maximin strategy every step.
class MinMaxPlayer final : public Player {
 public:
  InformationNeeds needs() const override { return {true, false, false}; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation&) override {}
  void WriteState(std::ostream& os) const override;

  const MaximinSolution& security() const { return security_; }

 private:
  MaximinSolution security_;
  Rng rng_;
};

// Fictitious play with learned payoffs: the matrix is never read, entries are
// filled in from observed rewards starting from the optimistic kMaxPayoff.
class FictitiousPlayer final : public Player {
 public:
  InformationNeeds needs() const override { return {false, true, false}; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

  std::span<const std::int64_t> opponent_counts() const { return counts_; }
  double estimate(int own, int opp) const { return estimates_(own, opp); }

 private:
  int n_actions_ = 0;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
  PayoffMatrix estimates_;
  std::vector<double> scratch_;
  Rng rng_;
};

struct HeuristicFlags {
  bool window = false;
  bool state = false;
  double window_rate = 0.01;
};

// J: keeps the cumulative (or windowed) counterfactual return of every action
// and plays the best one.
class CumulativeReturnPlayer final : public Player {
 public:
  explicit CumulativeReturnPlayer(HeuristicFlags flags = {}) : flags_(flags) {}

  InformationNeeds needs() const override {
    return {false, flags_.state, true};
  }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

  std::span<const double> scores(int state) const { return scores_.Row(state); }
  int current_state() const { return state_; }

 private:
  HeuristicFlags flags_;
  int n_actions_ = 0;
  QTable scores_;
  int state_ = 0;
  Rng rng_;
};

struct QParams {
  double gamma = 0.95;
  // Constant learning rate; when unset the rate is 1/t.
  std::optional<double> alpha;
  HeuristicFlags heuristics;
};

// Epsilon-greedy Q-learning. Single state unless the state heuristic is on.
class QLearner final : public Player {
 public:
  explicit QLearner(QParams params = {}) : params_(params) {}

  InformationNeeds needs() const override {
    return {false, params_.heuristics.state, false};
  }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

  const QTable& q_table() const { return q_; }
  int current_state() const { return state_; }

 private:
  QParams params_;
  int n_actions_ = 0;
  QTable q_;
  std::vector<std::int64_t> visits_;
  int state_ = 0;
  std::int64_t last_t_ = 1;
  Rng rng_;
};

struct SatisficingParams {
  double initial_aspiration = 12.0;
  double lambda = 0.99;
};

class SatisficingPlayer final : public Player {
 public:
  explicit SatisficingPlayer(SatisficingParams params = {}) : params_(params) {}

  InformationNeeds needs() const override { return {}; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock&) override { return current_; }
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

  double aspiration() const { return aspiration_; }

 private:
  SatisficingParams params_;
  int n_actions_ = 0;
  int current_ = 0;
  double aspiration_ = 0.0;
  Rng rng_;
};

struct UcbParams {
  double c = 100.0;
  HeuristicFlags heuristics;
};

class UcbPlayer final : public Player {
 public:
  explicit UcbPlayer(UcbParams params = {}) : params_(params) {}

  InformationNeeds needs() const override {
    return {false, params_.heuristics.state, false};
  }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

  const MeanEstimate& estimate(int state, int action) const {
    return estimates_[static_cast<std::size_t>(state) * n_actions_ + action];
  }
  int current_state() const { return state_; }

 private:
  UcbParams params_;
  int n_actions_ = 0;
  std::vector<MeanEstimate> estimates_;
  std::vector<std::int64_t> visits_;
  std::vector<double> scratch_;
  int state_ = 0;
  Rng rng_;
};

struct Exp3Params {
  double gamma = 0.001;
};

class Exp3Player final : public Player {
 public:
  explicit Exp3Player(Exp3Params params = {}) : params_(params) {}

  InformationNeeds needs() const override { return {}; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

  std::span<const double> weights() const { return weights_; }
  std::vector<double> probabilities() const {
    return Exp3Probabilities(weights_, params_.gamma);
  }

 private:
  Exp3Params params_;
  std::vector<double> weights_;
  std::vector<double> probs_;
  Rng rng_;
};

struct M3Params {
  double gamma = 0.95;
  double alpha = 0.1;
  double lambda = 0.01;
};

// Optimistic Q-learning over the previous joint action, falling back to the
// maximin strategy with a probability that grows with the cumulative shortfall
// below the security level.
class M3Player final : public Player {
 public:
  explicit M3Player(M3Params params = {}) : params_(params) {}

  InformationNeeds needs() const override { return {true, true, false}; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

  const QTable& q_table() const { return q_; }
  const MaximinSolution& security() const { return security_; }
  double cumulative_reward() const { return cumulative_reward_; }
  double last_fallback_probability() const { return last_fallback_; }

 private:
  M3Params params_;
  int n_actions_ = 0;
  MaximinSolution security_;
  QTable q_;
  int state_ = 0;
  double cumulative_reward_ = 0.0;
  double last_fallback_ = 0.0;
  Rng rng_;
};

// Draws an index from a probability vector with one uniform draw.
int SampleIndex(std::span<const double> probs, Rng& rng);

}  // namespace rmg

#endif  // RMG_PLAYERS_H_

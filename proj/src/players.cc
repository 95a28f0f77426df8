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

#include "rmg/players.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rmg/errors.h"

namespace rmg {
namespace {

void RequireMatrix(const GameView& view, const char* who) {
  if (!view.own_payoffs) {
    throw ConfigError(std::string(who) + " needs the payoff matrix");
  }
}

void RequireOpponentAction(const Observation& obs, const char* who) {
  if (!obs.opponent_action) {
    throw ConfigError(std::string(who) + " needs the opponent's action");
  }
}

template <typename Range>
void WriteValues(std::ostream& os, const Range& values) {
  os << '[';
  for (const auto& v : values) os << v << ' ';
  os << ']';
}

}  // namespace

GameView FullGameView(const MatrixGame& game, Role role) {
  GameView view;
  view.n_actions = game.n_actions();
  view.role = role;
  view.own_payoffs = game.OwnPayoffs(role);
  view.opponent_payoffs = game.OpponentPayoffs(role);
  return view;
}

GameView FilterView(const GameView& view, const InformationNeeds& needs) {
  GameView out;
  out.n_actions = view.n_actions;
  out.role = view.role;
  if (needs.needs_matrix) {
    out.own_payoffs = view.own_payoffs;
    out.opponent_payoffs = view.opponent_payoffs;
  }
  return out;
}

Observation FilterObservation(const Observation& obs,
                              const InformationNeeds& needs) {
  Observation out;
  out.own_action = obs.own_action;
  out.reward = obs.reward;
  if (needs.needs_opponent_action) out.opponent_action = obs.opponent_action;
  if (needs.needs_counterfactuals) {
    out.counterfactual_rewards = obs.counterfactual_rewards;
  }
  return out;
}

std::string Player::StateSnapshot() const {
  std::ostringstream os;
  os << std::hexfloat;
  WriteState(os);
  return os.str();
}

int SampleIndex(std::span<const double> probs, Rng& rng) {
  const double u = rng.Uniform01();
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  // Rounding left a sliver above the last cumulative value.
  for (std::size_t i = probs.size(); i-- > 0;) {
    if (probs[i] > 0.0) return static_cast<int>(i);
  }
  return 0;
}

// R

void RandomPlayer::Init(const GameView& view, std::uint64_t seed) {
  n_actions_ = view.n_actions;
  rng_.Seed(seed);
}

int RandomPlayer::SelectAction(const MatchClock&) {
  return rng_.UniformInt(n_actions_);
}

void RandomPlayer::WriteState(std::ostream& os) const {
  os << "R " << rng_.State();
}

// G

void GreedyPlayer::Init(const GameView& view, std::uint64_t seed) {
  RequireMatrix(view, "G");
  n_actions_ = view.n_actions;
  best_responses_.clear();
  for (int j = 0; j < n_actions_; ++j) {
    best_responses_.push_back(BestResponsePure(*view.own_payoffs, j));
  }
  last_opponent_action_.reset();
  rng_.Seed(seed);
}

int GreedyPlayer::SelectAction(const MatchClock&) {
  if (!last_opponent_action_) return rng_.UniformInt(n_actions_);
  const auto& candidates = best_responses_[*last_opponent_action_];
  if (candidates.size() == 1) return candidates.front();
  return candidates[rng_.UniformInt(static_cast<int>(candidates.size()))];
}

void GreedyPlayer::Observe(const Observation& obs) {
  RequireOpponentAction(obs, "G");
  last_opponent_action_ = *obs.opponent_action;
}

void GreedyPlayer::WriteState(std::ostream& os) const {
  os << "G " << last_opponent_action_.value_or(-1) << ' ' << rng_.State();
}

// B

void BullyPlayer::Init(const GameView& view, std::uint64_t) {
  RequireMatrix(view, "B");
  if (!view.opponent_payoffs) {
    throw ConfigError("B needs the opponent's payoff matrix");
  }
  action_ = BullyAction(*view.own_payoffs, *view.opponent_payoffs);
}

void BullyPlayer::WriteState(std::ostream& os) const { os << "B " << action_; }

// MinMax

void MinMaxPlayer::Init(const GameView& view, std::uint64_t seed) {
  RequireMatrix(view, "MinMax");
  security_ = MaximinSolve(*view.own_payoffs);
  rng_.Seed(seed);
}

int MinMaxPlayer::SelectAction(const MatchClock&) {
  return SampleIndex(security_.strategy.probs, rng_);
}

void MinMaxPlayer::WriteState(std::ostream& os) const {
  os << "MinMax " << rng_.State();
}

// F

void FictitiousPlayer::Init(const GameView& view, std::uint64_t seed) {
  n_actions_ = view.n_actions;
  counts_.assign(n_actions_, 0);
  total_ = 0;
  estimates_ = PayoffMatrix(n_actions_, kMaxPayoff);
  scratch_.assign(n_actions_, 0.0);
  rng_.Seed(seed);
}

int FictitiousPlayer::SelectAction(const MatchClock&) {
  if (total_ == 0) return rng_.UniformInt(n_actions_);
  for (int i = 0; i < n_actions_; ++i) {
    double v = 0.0;
    for (int j = 0; j < n_actions_; ++j) {
      v += static_cast<double>(counts_[j]) * estimates_(i, j);
    }
    scratch_[i] = v / static_cast<double>(total_);
  }
  return ArgmaxRandomTies(scratch_, rng_);
}

void FictitiousPlayer::Observe(const Observation& obs) {
  RequireOpponentAction(obs, "F");
  const int opp = *obs.opponent_action;
  ++counts_[opp];
  ++total_;
  estimates_(obs.own_action, opp) = obs.reward;
}

void FictitiousPlayer::WriteState(std::ostream& os) const {
  os << "F ";
  WriteValues(os, counts_);
  for (int i = 0; i < n_actions_; ++i) WriteValues(os, estimates_.Row(i));
  os << ' ' << rng_.State();
}

// J

void CumulativeReturnPlayer::Init(const GameView& view, std::uint64_t seed) {
  n_actions_ = view.n_actions;
  const int states = flags_.state ? JointStateCount(n_actions_) : 1;
  scores_ = QTable(states, n_actions_, 0.0);
  state_ = flags_.state ? InitialJointState(n_actions_) : 0;
  rng_.Seed(seed);
}

int CumulativeReturnPlayer::SelectAction(const MatchClock&) {
  return ArgmaxRandomTies(scores_.Row(state_), rng_);
}

void CumulativeReturnPlayer::Observe(const Observation& obs) {
  if (static_cast<int>(obs.counterfactual_rewards.size()) != n_actions_) {
    throw ConfigError("J needs the counterfactual reward vector");
  }
  for (int i = 0; i < n_actions_; ++i) {
    double& score = scores_(state_, i);
    const double r = obs.counterfactual_rewards[i];
    if (flags_.window) {
      score = (1.0 - flags_.window_rate) * score + flags_.window_rate * r;
    } else {
      score += r;
    }
  }
  if (flags_.state) {
    RequireOpponentAction(obs, "J+s");
    state_ = EncodeJointState(obs.own_action, *obs.opponent_action, n_actions_);
  }
}

void CumulativeReturnPlayer::WriteState(std::ostream& os) const {
  os << "J " << state_ << ' ';
  WriteValues(os, scores_.values());
  os << ' ' << rng_.State();
}

// Q

void QLearner::Init(const GameView& view, std::uint64_t seed) {
  n_actions_ = view.n_actions;
  const int states = params_.heuristics.state ? JointStateCount(n_actions_) : 1;
  q_ = QTable(states, n_actions_, 0.0);
  visits_.assign(states, 0);
  state_ = params_.heuristics.state ? InitialJointState(n_actions_) : 0;
  last_t_ = 1;
  rng_.Seed(seed);
}

int QLearner::SelectAction(const MatchClock& clock) {
  last_t_ = params_.heuristics.state ? visits_[state_] + 1 : clock.t;
  if (rng_.Bernoulli(EpsilonSchedule(last_t_, n_actions_))) {
    return rng_.UniformInt(n_actions_);
  }
  return ArgmaxRandomTies(q_.Row(state_), rng_);
}

void QLearner::Observe(const Observation& obs) {
  int next = 0;
  if (params_.heuristics.state) {
    RequireOpponentAction(obs, "Q+s");
    next = EncodeJointState(obs.own_action, *obs.opponent_action, n_actions_);
  }
  double alpha = 1.0 / static_cast<double>(last_t_);
  if (params_.heuristics.window) {
    alpha = params_.heuristics.window_rate;
  } else if (params_.alpha) {
    alpha = *params_.alpha;
  }
  q_.Update(state_, obs.own_action, obs.reward, next, alpha, params_.gamma);
  ++visits_[state_];
  state_ = next;
}

void QLearner::WriteState(std::ostream& os) const {
  os << "Q " << state_ << ' ' << last_t_ << ' ';
  WriteValues(os, visits_);
  WriteValues(os, q_.values());
  os << ' ' << rng_.State();
}

// S

void SatisficingPlayer::Init(const GameView& view, std::uint64_t seed) {
  n_actions_ = view.n_actions;
  rng_.Seed(seed);
  aspiration_ = params_.initial_aspiration;
  current_ = rng_.UniformInt(n_actions_);
}

void SatisficingPlayer::Observe(const Observation& obs) {
  const SatisficingStep step = SatisficingUpdate(
      aspiration_, obs.own_action, obs.reward, params_.lambda, n_actions_, rng_);
  current_ = step.next_action;
  aspiration_ = step.aspiration;
}

void SatisficingPlayer::WriteState(std::ostream& os) const {
  os << "S " << current_ << ' ' << aspiration_ << ' ' << rng_.State();
}

// U

void UcbPlayer::Init(const GameView& view, std::uint64_t seed) {
  n_actions_ = view.n_actions;
  const int states = params_.heuristics.state ? JointStateCount(n_actions_) : 1;
  estimates_.assign(static_cast<std::size_t>(states) * n_actions_, {});
  visits_.assign(states, 0);
  scratch_.assign(n_actions_, 0.0);
  state_ = params_.heuristics.state ? InitialJointState(n_actions_) : 0;
  rng_.Seed(seed);
}

int UcbPlayer::SelectAction(const MatchClock& clock) {
  const std::int64_t t =
      params_.heuristics.state ? visits_[state_] + 1 : clock.t;
  for (int a = 0; a < n_actions_; ++a) {
    const MeanEstimate& e = estimate(state_, a);
    scratch_[a] = UcbIndex(e.mean, e.count, t, params_.c);
  }
  return ArgmaxRandomTies(scratch_, rng_);
}

void UcbPlayer::Observe(const Observation& obs) {
  MeanEstimate& e =
      estimates_[static_cast<std::size_t>(state_) * n_actions_ + obs.own_action];
  std::optional<double> rate;
  if (params_.heuristics.window) rate = params_.heuristics.window_rate;
  e = MeanUpdate(e, obs.reward, rate);
  ++visits_[state_];
  if (params_.heuristics.state) {
    RequireOpponentAction(obs, "U+s");
    state_ = EncodeJointState(obs.own_action, *obs.opponent_action, n_actions_);
  }
}

void UcbPlayer::WriteState(std::ostream& os) const {
  os << "U " << state_ << ' ';
  WriteValues(os, visits_);
  for (const MeanEstimate& e : estimates_) os << e.mean << ':' << e.count << ' ';
  os << rng_.State();
}

// Exp3

void Exp3Player::Init(const GameView& view, std::uint64_t seed) {
  weights_.assign(view.n_actions, 1.0);
  probs_.assign(view.n_actions, 0.0);
  rng_.Seed(seed);
}

int Exp3Player::SelectAction(const MatchClock&) {
  Exp3Probabilities(weights_, params_.gamma, probs_);
  return SampleIndex(probs_, rng_);
}

void Exp3Player::Observe(const Observation& obs) {
  Exp3Update(weights_, params_.gamma, obs.own_action, obs.reward,
             probs_[obs.own_action]);
  // Probabilities are scale-free; keep the weights far from overflow.
  double largest = 0.0;
  for (double w : weights_) largest = std::max(largest, w);
  if (largest > 1e100) {
    for (double& w : weights_) {
      w = std::max(w / largest, std::numeric_limits<double>::min());
    }
  }
}

void Exp3Player::WriteState(std::ostream& os) const {
  os << "Exp3 ";
  WriteValues(os, weights_);
  WriteValues(os, probs_);
  os << ' ' << rng_.State();
}

// M3

void M3Player::Init(const GameView& view, std::uint64_t seed) {
  RequireMatrix(view, "M3");
  n_actions_ = view.n_actions;
  security_ = MaximinSolve(*view.own_payoffs);
  q_ = QTable(JointStateCount(n_actions_), n_actions_,
              kMaxPayoff / (1.0 - params_.gamma));
  state_ = InitialJointState(n_actions_);
  cumulative_reward_ = 0.0;
  last_fallback_ = 0.0;
  rng_.Seed(seed);
}

int M3Player::SelectAction(const MatchClock& clock) {
  last_fallback_ = SecurityFallbackProbability(
      security_.value, clock.t, cumulative_reward_, params_.lambda);
  if (last_fallback_ > 0.0 && rng_.Bernoulli(last_fallback_)) {
    return SampleIndex(security_.strategy.probs, rng_);
  }
  return ArgmaxRandomTies(q_.Row(state_), rng_);
}

void M3Player::Observe(const Observation& obs) {
  RequireOpponentAction(obs, "M3");
  const int next =
      EncodeJointState(obs.own_action, *obs.opponent_action, n_actions_);
  q_.Update(state_, obs.own_action, obs.reward, next, params_.alpha,
            params_.gamma);
  cumulative_reward_ += obs.reward;
  state_ = next;
}

void M3Player::WriteState(std::ostream& os) const {
  os << "M3 " << state_ << ' ' << cumulative_reward_ << ' ' << last_fallback_
     << ' ';
  WriteValues(os, q_.values());
  os << ' ' << rng_.State();
}

}  // namespace rmg

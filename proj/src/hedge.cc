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

#include "rmg/hedge.h"

#include "rmg/errors.h"
#include "rmg/random.h"

namespace rmg {

HedgePlayer::HedgePlayer(std::unique_ptr<Player> top,
                         std::vector<std::unique_ptr<Player>> experts)
    : top_(std::move(top)), experts_(std::move(experts)) {
  if (!top_) throw ConfigError("hedge: missing top player");
  if (experts_.size() < 2) throw ConfigError("hedge: needs at least two experts");
  if (!top_->needs().RewardOnly()) {
    throw ConfigError("hedge: top player must learn from rewards only");
  }
  for (const auto& e : experts_) {
    expert_needs_.push_back(e->needs());
    needs_ = needs_ | expert_needs_.back();
  }
}

std::uint64_t HedgePlayer::TopSeed(std::uint64_t seed) {
  return DeriveSeed(seed, 0);
}

std::uint64_t HedgePlayer::ExpertSeed(std::uint64_t seed, int k) {
  return DeriveSeed(seed, k + 1);
}

void HedgePlayer::Init(const GameView& view, std::uint64_t seed) {
  n_actions_ = view.n_actions;
  GameView meta;
  meta.n_actions = n_experts();
  meta.role = view.role;
  top_->Init(meta, TopSeed(seed));
  for (int k = 0; k < n_experts(); ++k) {
    experts_[k]->Init(FilterView(view, expert_needs_[k]), ExpertSeed(seed, k));
  }
  expert_steps_.assign(experts_.size(), 0);
  last_chosen_.reset();
  awaiting_observation_ = false;
}

int HedgePlayer::SelectAction(const MatchClock& clock) {
  const int k = top_->SelectAction({clock.t, n_experts()});
  if (k < 0 || k >= n_experts()) {
    throw ProtocolError("hedge: top selected an invalid expert index");
  }
  last_chosen_ = k;
  awaiting_observation_ = true;
  return experts_[k]->SelectAction({clock.t, n_actions_});
}

void HedgePlayer::Observe(const Observation& obs) {
  if (!awaiting_observation_) {
    throw ProtocolError("hedge: observe called without a preceding select");
  }
  const int k = *last_chosen_;
  Observation meta;
  meta.own_action = k;
  meta.reward = obs.reward;
  top_->Observe(meta);
  experts_[k]->Observe(FilterObservation(obs, expert_needs_[k]));
  ++expert_steps_[k];
  awaiting_observation_ = false;
}

void HedgePlayer::WriteState(std::ostream& os) const {
  os << "H " << last_chosen_.value_or(-1) << ' ' << awaiting_observation_
     << " [";
  for (auto s : expert_steps_) os << s << ' ';
  os << "] top{";
  top_->WriteState(os);
  os << '}';
  for (const auto& e : experts_) {
    os << " e{";
    e->WriteState(os);
    os << '}';
  }
}

}  // namespace rmg

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

#ifndef RMG_HEDGE_H_
#define RMG_HEDGE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rmg/players.h"

namespace rmg {

// A top player picks one expert per step; the chosen expert picks the
// elementary action. After the reward only the top and that expert update,
// every other expert is left exactly as it was.
//
// The top plays a game whose actions are expert indices and observes only
// (chosen index, reward). Top and experts all see the match clock; an
// expert's per-state statistics only move on the steps it is chosen.
class HedgePlayer final : public Player {
 public:
  HedgePlayer(std::unique_ptr<Player> top,
              std::vector<std::unique_ptr<Player>> experts);

  InformationNeeds needs() const override { return needs_; }
  void Init(const GameView& view, std::uint64_t seed) override;
  int SelectAction(const MatchClock& clock) override;
  void Observe(const Observation& obs) override;
  void WriteState(std::ostream& os) const override;

  int n_experts() const { return static_cast<int>(experts_.size()); }
  const Player& top() const { return *top_; }
  const Player& expert(int k) const { return *experts_[k]; }
  std::optional<int> last_chosen() const { return last_chosen_; }
  std::int64_t expert_steps(int k) const { return expert_steps_[k]; }

  static std::uint64_t TopSeed(std::uint64_t seed);
  static std::uint64_t ExpertSeed(std::uint64_t seed, int k);

 private:
  std::unique_ptr<Player> top_;
  std::vector<std::unique_ptr<Player>> experts_;
  std::vector<InformationNeeds> expert_needs_;
  InformationNeeds needs_;
  int n_actions_ = 0;
  std::vector<std::int64_t> expert_steps_;
  std::optional<int> last_chosen_;
  bool awaiting_observation_ = false;
};

}  // namespace rmg

#endif  // RMG_HEDGE_H_

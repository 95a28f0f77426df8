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

#ifndef RMG_TOURNAMENT_H_
#define RMG_TOURNAMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rmg/game.h"
#include "rmg/ledger.h"
#include "rmg/player_spec.h"

namespace rmg {

inline constexpr std::int64_t kDefaultSteps = 100000;

std::uint64_t MatchSeed(std::uint64_t master_seed, int game_index, int row_id,
                        int col_id);

// Plays `steps` simultaneous rounds between two fresh players. Throws
// ConfigError before the first step if either spec is invalid.
MatchResult PlayMatch(const PlayerSpec& row_spec, const PlayerSpec& col_spec,
                      const MatrixGame& game, std::int64_t steps,
                      std::uint64_t seed, int game_index = 0, int row_id = 0,
                      int col_id = 1);

// One match per ordered pair of distinct players plus one self-play match per
// player. `ids` (defaults to 0..n-1) name the players in results and seeds.
// Results come back in (row, col) order whatever the thread count.
std::vector<MatchResult> RunRoundRobin(std::span<const PlayerSpec> specs,
                                       const MatrixGame& game, int game_index,
                                       std::int64_t steps,
                                       std::uint64_t master_seed,
                                       int threads = 1,
                                       std::span<const int> ids = {});

struct EliminationEvent {
  int player = 0;
  int after_game = 0;  // game index whose tournament triggered it
  double mean_return = 0.0;
  bool by_stagnation = false;
};

struct Standing {
  int player = 0;
  double mean_return = 0.0;
  // Whether this player leads the next one down significantly (paired test).
  bool significant_lead = false;
};

struct ExperimentReport {
  ScoreLedger ledger;       // with eliminated players retracted
  ScoreLedger full_ledger;  // every match ever played
  std::vector<EliminationEvent> eliminations;
  std::vector<Standing> standings;
  int games_played = 0;
};

// Plays one round robin per game. With elimination enabled, after each game
// the worst player may be removed and its matches retracted; the run stops
// once a single player is left or the games run out.
ExperimentReport RunExperiment(std::span<const PlayerSpec> specs,
                               const GameSet& games, std::int64_t steps,
                               const EliminationConfig& cfg,
                               std::uint64_t master_seed, int threads = 1);

}  // namespace rmg

#endif  // RMG_TOURNAMENT_H_

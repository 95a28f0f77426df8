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

#ifndef RMG_LEDGER_H_
#define RMG_LEDGER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace rmg {

struct MatchResult {
  int game_index = 0;
  int row_player = 0;
  int col_player = 0;
  double total_row = 0.0;
  double total_col = 0.0;
  std::int64_t steps = 0;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Match totals are converted to a fixed-point grid (2^-32) on entry and
// accumulated in 128-bit integers. Additions and retractions are therefore
// exact and independent of the order in which results arrive.
using FixedTotal = __int128;
FixedTotal ToFixed(double total);
double FromFixed(FixedTotal total);

// All match results of an experiment, the set of surviving players and the
// per-player totals over matches whose two participants both survive.
class ScoreLedger {
 public:
  using Key = std::tuple<int, int, int>;  // (game, row, col)

  explicit ScoreLedger(int n_players);

  int n_players() const { return n_players_; }
  bool IsActive(int player) const;
  std::vector<int> active_players() const;

  // Throws std::invalid_argument for unknown/inactive players or a duplicate
  // (game, row, col) key.
  void Add(const MatchResult& result);
  // Retracts every match involving `player`. Throws std::invalid_argument
  // when the player is not active.
  void Remove(int player);

  // Raw results, including retracted ones, in canonical key order.
  const std::map<Key, MatchResult>& results() const { return results_; }
  bool IsRetained(const MatchResult& r) const {
    return IsActive(r.row_player) && IsActive(r.col_player);
  }

  FixedTotal total(int player) const { return totals_[player]; }
  std::int64_t steps(int player) const { return steps_[player]; }
  // Mean per-step return over retained matches; 0 when there are none.
  double MeanReturn(int player) const;

  // Distinct game indices with at least one result.
  int games_played() const { return static_cast<int>(games_.size()); }
  const std::set<int>& games() const { return games_; }

  // Per-game mean per-step return of `player` over retained matches, for
  // every game in which the player has a retained match.
  std::map<int, double> PerGameMeans(int player) const;

 private:
  void Accumulate(const MatchResult& r, int sign);

  int n_players_;
  std::vector<bool> active_;
  std::map<Key, MatchResult> results_;
  std::vector<FixedTotal> totals_;
  std::vector<std::int64_t> steps_;
  std::set<int> games_;
};

struct RankEntry {
  int player = 0;
  double mean_return = 0.0;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

// Active players by descending mean return; equal means by ascending id.
std::vector<RankEntry> Ranking(const ScoreLedger& ledger);

// Paired test over games both players appear in: true when
// mean(leader - trailer) > k * standard error of that mean. Needs >= 2 games.
bool SignificantLead(const ScoreLedger& ledger, int leader, int trailer,
                     double k);

struct EliminationConfig {
  bool enabled = false;
  int min_games = 30;
  double significance_k = 2.0;
  int stagnation_window = 50;

  // Throws ConfigError when min_games < 2 or stagnation_window < 1.
  void Validate() const;
};

// Tracks how many consecutive tournaments produced the same full ordering.
class RankingHistory {
 public:
  void Record(const std::vector<int>& ordering);
  void Reset();
  int unchanged_count() const { return unchanged_; }
  const std::vector<int>& last() const { return last_; }

 private:
  std::vector<int> last_;
  int unchanged_ = 0;
};

// The worst player if it trails the before-last one significantly (after
// min_games games), or if the ordering has been stable for the configured
// window; std::nullopt otherwise.
std::optional<int> EliminateCheck(const ScoreLedger& ledger,
                                  const RankingHistory& history,
                                  const EliminationConfig& cfg);

}  // namespace rmg

#endif  // RMG_LEDGER_H_

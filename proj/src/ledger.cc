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

#include "rmg/ledger.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rmg/errors.h"

namespace rmg {

namespace {
constexpr double kFixedScale = 4294967296.0;  // 2^32
}  // namespace

FixedTotal ToFixed(double total) {
  return static_cast<FixedTotal>(std::llround(total * kFixedScale));
}

double FromFixed(FixedTotal total) {
  return static_cast<double>(total) / kFixedScale;
}

ScoreLedger::ScoreLedger(int n_players)
    : n_players_(n_players),
      active_(n_players, true),
      totals_(n_players, 0),
      steps_(n_players, 0) {
  if (n_players < 1) throw std::invalid_argument("ScoreLedger: no players");
}

bool ScoreLedger::IsActive(int player) const {
  return player >= 0 && player < n_players_ && active_[player];
}

std::vector<int> ScoreLedger::active_players() const {
  std::vector<int> out;
  for (int p = 0; p < n_players_; ++p) {
    if (active_[p]) out.push_back(p);
  }
  return out;
}

void ScoreLedger::Accumulate(const MatchResult& r, int sign) {
  totals_[r.row_player] += sign * ToFixed(r.total_row);
  totals_[r.col_player] += sign * ToFixed(r.total_col);
  steps_[r.row_player] += sign * r.steps;
  steps_[r.col_player] += sign * r.steps;
}

void ScoreLedger::Add(const MatchResult& r) {
  if (!IsActive(r.row_player) || !IsActive(r.col_player)) {
    throw std::invalid_argument("ScoreLedger::Add: player not active");
  }
  if (r.steps < 1) throw std::invalid_argument("ScoreLedger::Add: steps < 1");
  const Key key{r.game_index, r.row_player, r.col_player};
  if (!results_.emplace(key, r).second) {
    throw std::invalid_argument("ScoreLedger::Add: duplicate match (game " +
                                std::to_string(r.game_index) + ")");
  }
  games_.insert(r.game_index);
  Accumulate(r, +1);
}

void ScoreLedger::Remove(int player) {
  if (!IsActive(player)) {
    throw std::invalid_argument("ScoreLedger::Remove: player " +
                                std::to_string(player) + " is not active");
  }
  for (const auto& [key, r] : results_) {
    if ((r.row_player == player || r.col_player == player) && IsRetained(r)) {
      Accumulate(r, -1);
    }
  }
  active_[player] = false;
  totals_[player] = 0;
  steps_[player] = 0;
}

double ScoreLedger::MeanReturn(int player) const {
  if (steps_[player] == 0) return 0.0;
  return FromFixed(totals_[player]) / static_cast<double>(steps_[player]);
}

std::map<int, double> ScoreLedger::PerGameMeans(int player) const {
  std::map<int, std::pair<FixedTotal, std::int64_t>> acc;
  for (const auto& [key, r] : results_) {
    if (!IsRetained(r)) continue;
    if (r.row_player == player) {
      auto& a = acc[r.game_index];
      a.first += ToFixed(r.total_row);
      a.second += r.steps;
    }
    if (r.col_player == player) {
      auto& a = acc[r.game_index];
      a.first += ToFixed(r.total_col);
      a.second += r.steps;
    }
  }
  std::map<int, double> out;
  for (const auto& [g, a] : acc) {
    out[g] = FromFixed(a.first) / static_cast<double>(a.second);
  }
  return out;
}

std::vector<RankEntry> Ranking(const ScoreLedger& ledger) {
  std::vector<RankEntry> out;
  for (int p : ledger.active_players()) out.push_back({p, ledger.MeanReturn(p)});
  std::stable_sort(out.begin(), out.end(),
                   [](const RankEntry& a, const RankEntry& b) {
                     return a.mean_return > b.mean_return;
                   });
  return out;
}

bool SignificantLead(const ScoreLedger& ledger, int leader, int trailer,
                     double k) {
  const auto lead = ledger.PerGameMeans(leader);
  const auto trail = ledger.PerGameMeans(trailer);
  std::vector<double> diffs;
  for (const auto& [g, v] : lead) {
    if (auto it = trail.find(g); it != trail.end()) diffs.push_back(v - it->second);
  }
  const auto n = static_cast<double>(diffs.size());
  if (diffs.size() < 2) return false;
  double mean = 0.0;
  for (double d : diffs) mean += d;
  mean /= n;
  double ss = 0.0;
  for (double d : diffs) ss += (d - mean) * (d - mean);
  const double se = std::sqrt(ss / (n - 1.0) / n);
  return mean > k * se && mean > 0.0;
}

void EliminationConfig::Validate() const {
  if (min_games < 2) throw ConfigError("min_games must be >= 2");
  if (stagnation_window < 1) throw ConfigError("stagnation_window must be >= 1");
  if (!(significance_k >= 0.0)) throw ConfigError("significance_k must be >= 0");
}

void RankingHistory::Record(const std::vector<int>& ordering) {
  if (unchanged_ > 0 && ordering == last_) {
    ++unchanged_;
  } else {
    last_ = ordering;
    unchanged_ = 1;
  }
}

void RankingHistory::Reset() {
  last_.clear();
  unchanged_ = 0;
}

std::optional<int> EliminateCheck(const ScoreLedger& ledger,
                                  const RankingHistory& history,
                                  const EliminationConfig& cfg) {
  const std::vector<RankEntry> ranking = Ranking(ledger);
  if (ranking.size() < 2) return std::nullopt;
  const int worst = ranking[ranking.size() - 1].player;
  const int before_last = ranking[ranking.size() - 2].player;
  if (ledger.games_played() >= cfg.min_games &&
      SignificantLead(ledger, before_last, worst, cfg.significance_k)) {
    return worst;
  }
  if (history.unchanged_count() >= cfg.stagnation_window) return worst;
  return std::nullopt;
}

}  // namespace rmg

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

#include "rmg/tournament.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rmg/errors.h"
#include "rmg/factory.h"
#include "rmg/random.h"

namespace rmg {
namespace {

void ParallelFor(int n, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::jthread> workers;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::uint64_t MatchSeed(std::uint64_t master_seed, int game_index, int row_id,
                        int col_id) {
  return DeriveSeed(master_seed, game_index, row_id, col_id);
}

MatchResult PlayMatch(const PlayerSpec& row_spec, const PlayerSpec& col_spec,
                      const MatrixGame& game, std::int64_t steps,
                      std::uint64_t seed, int game_index, int row_id,
                      int col_id) {
  if (steps < 1) throw std::invalid_argument("PlayMatch: steps must be >= 1");
  std::unique_ptr<Player> row = MakePlayer(row_spec);
  std::unique_ptr<Player> col = MakePlayer(col_spec);
  const InformationNeeds row_needs = row->needs();
  const InformationNeeds col_needs = col->needs();
  row->Init(FilterView(FullGameView(game, Role::kRow), row_needs),
            DeriveSeed(seed, 0));
  col->Init(FilterView(FullGameView(game, Role::kColumn), col_needs),
            DeriveSeed(seed, 1));

  const int k = game.n_actions();
  const PayoffMatrix& pr = game.payoff_row();
  const PayoffMatrix& pc = game.payoff_col();
  // Row b of row_cf is the row player's payoff column against action b; row a
  // of pc is the column player's payoffs against row action a.
  const PayoffMatrix row_cf = pr.Transposed();

  double total_row = 0.0;
  double total_col = 0.0;
  for (std::int64_t t = 1; t <= steps; ++t) {
    const MatchClock clock{t, k};
    const int a = row->SelectAction(clock);
    const int b = col->SelectAction(clock);
    if (a < 0 || a >= k || b < 0 || b >= k) {
      throw ProtocolError("PlayMatch: player selected an out-of-range action");
    }
    const double rr = pr(a, b);
    const double rc = pc(a, b);
    total_row += rr;
    total_col += rc;

    Observation orow;
    orow.own_action = a;
    orow.reward = rr;
    if (row_needs.needs_opponent_action) orow.opponent_action = b;
    if (row_needs.needs_counterfactuals) orow.counterfactual_rewards = row_cf.Row(b);
    Observation ocol;
    ocol.own_action = b;
    ocol.reward = rc;
    if (col_needs.needs_opponent_action) ocol.opponent_action = a;
    if (col_needs.needs_counterfactuals) ocol.counterfactual_rewards = pc.Row(a);
    row->Observe(orow);
    col->Observe(ocol);
  }
  return {game_index, row_id, col_id, total_row, total_col, steps};
}

std::vector<MatchResult> RunRoundRobin(std::span<const PlayerSpec> specs,
                                       const MatrixGame& game, int game_index,
                                       std::int64_t steps,
                                       std::uint64_t master_seed, int threads,
                                       std::span<const int> ids) {
  const int n = static_cast<int>(specs.size());
  std::vector<int> default_ids;
  if (ids.empty()) {
    default_ids.resize(n);
    std::iota(default_ids.begin(), default_ids.end(), 0);
    ids = default_ids;
  }
  if (static_cast<int>(ids.size()) != n) {
    throw std::invalid_argument("RunRoundRobin: ids and specs differ in size");
  }
  for (const PlayerSpec& s : specs) ValidateSpec(s);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<MatchResult> results(pairs.size());
  ParallelFor(static_cast<int>(pairs.size()), threads, [&](int m) {
    const auto [i, j] = pairs[m];
    results[m] = PlayMatch(specs[i], specs[j], game, steps,
                           MatchSeed(master_seed, game_index, ids[i], ids[j]),
                           game_index, ids[i], ids[j]);
  });
  return results;
}

ExperimentReport RunExperiment(std::span<const PlayerSpec> specs,
                               const GameSet& games, std::int64_t steps,
                               const EliminationConfig& cfg,
                               std::uint64_t master_seed, int threads) {
  const int n = static_cast<int>(specs.size());
  if (n < 1) throw ConfigError("RunExperiment: no players");
  if (games.games.empty()) throw ConfigError("RunExperiment: empty game set");
  if (cfg.enabled) cfg.Validate();
  for (const PlayerSpec& s : specs) ValidateSpec(s);

  ExperimentReport report{ScoreLedger(n), ScoreLedger(n), {}, {}, 0};
  RankingHistory history;
  // lead_at_elimination[w][p]: did p lead w significantly when w went out.
  std::map<int, std::map<int, bool>> lead_at_elimination;
  std::optional<double> survivor_mean;

  for (int g = 0; g < static_cast<int>(games.games.size()); ++g) {
    const std::vector<int> active = report.ledger.active_players();
    if (active.size() <= 1 && cfg.enabled) break;
    std::vector<PlayerSpec> active_specs;
    for (int p : active) active_specs.push_back(specs[p]);
    for (const MatchResult& r :
         RunRoundRobin(active_specs, games.games[g], g, steps, master_seed,
                       threads, active)) {
      report.ledger.Add(r);
      report.full_ledger.Add(r);
    }
    report.games_played = g + 1;
    if (!cfg.enabled) continue;

    std::vector<int> ordering;
    for (const RankEntry& e : Ranking(report.ledger)) ordering.push_back(e.player);
    history.Record(ordering);
    const std::optional<int> worst = EliminateCheck(report.ledger, history, cfg);
    if (!worst) continue;

    EliminationEvent ev;
    ev.player = *worst;
    ev.after_game = g;
    ev.mean_return = report.ledger.MeanReturn(*worst);
    ev.by_stagnation = !(report.ledger.games_played() >= cfg.min_games &&
                         SignificantLead(report.ledger, ordering[ordering.size() - 2],
                                         *worst, cfg.significance_k));
    auto& leads = lead_at_elimination[*worst];
    for (int p : active) {
      if (p != *worst) {
        leads[p] = SignificantLead(report.ledger, p, *worst, cfg.significance_k);
      }
    }
    if (active.size() == 2) {
      survivor_mean = report.ledger.MeanReturn(active[0] == *worst ? active[1]
                                                                   : active[0]);
    }
    report.eliminations.push_back(ev);
    report.ledger.Remove(*worst);
    history.Reset();
  }

  // Survivors by current mean, then eliminated players, last out first.
  for (const RankEntry& e : Ranking(report.ledger)) {
    report.standings.push_back({e.player, e.mean_return, false});
  }
  if (survivor_mean && report.standings.size() == 1) {
    report.standings.front().mean_return = *survivor_mean;
  }
  for (auto it = report.eliminations.rbegin(); it != report.eliminations.rend();
       ++it) {
    report.standings.push_back({it->player, it->mean_return, false});
  }
  for (std::size_t i = 0; i + 1 < report.standings.size(); ++i) {
    const int p = report.standings[i].player;
    const int next = report.standings[i + 1].player;
    if (auto it = lead_at_elimination.find(next); it != lead_at_elimination.end()) {
      report.standings[i].significant_lead = it->second.at(p);
    } else {
      report.standings[i].significant_lead =
          SignificantLead(report.ledger, p, next, cfg.significance_k);
    }
  }
  return report;
}

}  // namespace rmg

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

#ifndef RMG_ANALYSIS_H_
#define RMG_ANALYSIS_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmg/ledger.h"

namespace rmg {

// Per ordered pair (i, j): (mean per-step return of i as row against j,
// mean per-step return of j as column against i). rt sums a row's first
// components, ct a column's second components, T = rt + ct.
struct CrossTable {
  using Cell = std::pair<double, double>;

  std::vector<std::string> players;
  std::vector<std::vector<Cell>> cells;
  std::vector<double> rt;
  std::vector<double> ct;
  std::vector<double> total;

  int size() const { return static_cast<int>(players.size()); }
  // Rebuilds rt, ct and total from the cells.
  void RecomputeTotals();
  int IndexOf(std::string_view player) const;  // -1 when absent
};

// Table over the ledger's active players; `names` is indexed by player id.
// Throws IncompleteDataError when an ordered pair has no retained match.
CrossTable BuildCrossTable(const ScoreLedger& ledger,
                           std::span<const std::string> names);

// Adds an idealised player that, against each opponent, takes the best base
// cell: in column H the row's cell with the largest second component, in row
// H the column's cell with the largest first component, and for (H, H) the
// cell with the largest sum. Ties go to the first player in order.
// Base totals are carried over and extended with the H cells.
CrossTable PerfectHedgerProjection(const CrossTable& base,
                                   const std::string& name = "H");

enum class LeagueGrade { kMinusMinus, kEqual, kPlus, kPlusPlus };

std::string_view ToString(LeagueGrade grade);

// rank is 1-based. Rank 1 with a significant margin: ++; rank 1: +;
// ranks 2..ceil(n/3): =; anything lower: --.
LeagueGrade GradeInLeague(int rank, bool margin_significant, int league_size);

struct RankingRow {
  std::string player;
  double mean_return = 0.0;
  bool significant_lead = false;
};

// CSV: header ",<names...>,rt,T", one row per player with cells written as
// "first;second" (2 decimals), then a "ct" row. Names containing commas or
// quotes are quoted.
std::string RenderCrossTableCsv(const CrossTable& table);
// Keeps the stored rt, ct and T. Throws when they stray from the cells by more
// than the two-decimal rounding of the printed terms allows.
CrossTable ParseCrossTableCsv(std::string_view text);
std::string RenderCrossTableMarkdown(const CrossTable& table);

// CSV: header "rank,player,mean_return,significant_lead".
std::string RenderRankingCsv(std::span<const RankingRow> rows);
std::vector<RankingRow> ParseRankingCsv(std::string_view text);
std::string RenderRankingMarkdown(std::span<const RankingRow> rows);

// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> SplitCsvLine(std::string_view line);

}  // namespace rmg

#endif  // RMG_ANALYSIS_H_

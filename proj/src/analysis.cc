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

#include "rmg/analysis.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rmg/errors.h"

namespace rmg {
namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

double ParseDouble(const std::string& s, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') {
    throw std::runtime_error(std::string("CSV: bad ") + what + " '" + s + "'");
  }
  return v;
}

std::vector<std::string> Lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream is{std::string(text)};
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

void CrossTable::RecomputeTotals() {
  const int n = size();
  rt.assign(n, 0.0);
  ct.assign(n, 0.0);
  total.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rt[i] += cells[i][j].first;
      ct[j] += cells[i][j].second;
    }
  }
  for (int i = 0; i < n; ++i) total[i] = rt[i] + ct[i];
}

int CrossTable::IndexOf(std::string_view player) const {
  for (int i = 0; i < size(); ++i) {
    if (players[i] == player) return i;
  }
  return -1;
}

CrossTable BuildCrossTable(const ScoreLedger& ledger,
                           std::span<const std::string> names) {
  const std::vector<int> active = ledger.active_players();
  std::map<int, int> slot;
  for (int i = 0; i < static_cast<int>(active.size()); ++i) slot[active[i]] = i;
  const int n = static_cast<int>(active.size());

  struct Acc {
    double row = 0.0, col = 0.0;
    int games = 0;
  };
  std::vector<std::vector<Acc>> acc(n, std::vector<Acc>(n));
  for (const auto& [key, r] : ledger.results()) {
    if (!ledger.IsRetained(r)) continue;
    Acc& a = acc[slot[r.row_player]][slot[r.col_player]];
    a.row += r.total_row / static_cast<double>(r.steps);
    a.col += r.total_col / static_cast<double>(r.steps);
    ++a.games;
  }

  CrossTable table;
  for (int p : active) {
    table.players.push_back(p < static_cast<int>(names.size())
                                ? names[p]
                                : "P" + std::to_string(p));
  }
  table.cells.assign(n, std::vector<CrossTable::Cell>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Acc& a = acc[i][j];
      if (a.games == 0) {
        throw IncompleteDataError("cross table: no match for " +
                                  table.players[i] + " vs " + table.players[j]);
      }
      table.cells[i][j] = {a.row / a.games, a.col / a.games};
    }
  }
  table.RecomputeTotals();
  return table;
}

CrossTable PerfectHedgerProjection(const CrossTable& base,
                                   const std::string& name) {
  const int n = base.size();
  if (n < 2) throw std::invalid_argument("projection needs at least 2 players");
  if (static_cast<int>(base.rt.size()) != n ||
      static_cast<int>(base.ct.size()) != n) {
    throw std::invalid_argument("projection needs the base table's totals");
  }
  CrossTable out;
  out.players = base.players;
  out.players.push_back(name);
  out.cells.assign(n + 1, std::vector<CrossTable::Cell>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.cells[i][j] = base.cells[i][j];
  }
  // Column H: H plays column against row player l.
  for (int l = 0; l < n; ++l) {
    int best = 0;
    for (int c = 1; c < n; ++c) {
      if (base.cells[l][c].second > base.cells[l][best].second) best = c;
    }
    out.cells[l][n] = base.cells[l][best];
  }
  // Row H: H plays row against column player c.
  for (int c = 0; c < n; ++c) {
    int best = 0;
    for (int r = 1; r < n; ++r) {
      if (base.cells[r][c].first > base.cells[best][c].first) best = r;
    }
    out.cells[n][c] = base.cells[best][c];
  }
  int bi = 0, bj = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& cell = base.cells[i][j];
      const auto& best = base.cells[bi][bj];
      if (cell.first + cell.second > best.first + best.second) {
        bi = i;
        bj = j;
      }
    }
  }
  out.cells[n][n] = base.cells[bi][bj];

  // Extend the base aggregates rather than re-summing the cells: a table read
  // back from two-decimal text keeps totals of the unrounded data. For a table
  // whose totals came from RecomputeTotals the result is the same bit for bit,
  // since the H terms are added last either way.
  out.rt.assign(n + 1, 0.0);
  out.ct.assign(n + 1, 0.0);
  out.total.assign(n + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    out.rt[i] = base.rt[i] + out.cells[i][n].first;
    out.ct[i] = base.ct[i] + out.cells[n][i].second;
  }
  for (int j = 0; j <= n; ++j) {
    out.rt[n] += out.cells[n][j].first;
    out.ct[n] += out.cells[j][n].second;
  }
  for (int i = 0; i <= n; ++i) out.total[i] = out.rt[i] + out.ct[i];
  return out;
}

std::string_view ToString(LeagueGrade grade) {
  switch (grade) {
    case LeagueGrade::kMinusMinus:
      return "--";
    case LeagueGrade::kEqual:
      return "=";
    case LeagueGrade::kPlus:
      return "+";
    case LeagueGrade::kPlusPlus:
      return "++";
  }
  return "?";
}

LeagueGrade GradeInLeague(int rank, bool margin_significant, int league_size) {
  if (league_size < 3) throw std::invalid_argument("league needs >= 3 players");
  if (rank < 1 || rank > league_size) {
    throw std::invalid_argument("rank outside the league");
  }
  if (rank == 1) {
    return margin_significant ? LeagueGrade::kPlusPlus : LeagueGrade::kPlus;
  }
  const int runner_up_band = (league_size + 2) / 3;
  return rank <= runner_up_band ? LeagueGrade::kEqual : LeagueGrade::kMinusMinus;
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw std::runtime_error("CSV: unterminated quote");
  fields.push_back(std::move(field));
  return fields;
}

std::string RenderCrossTableCsv(const CrossTable& table) {
  std::string out;
  for (const auto& p : table.players) out += "," + CsvField(p);
  out += ",rt,T\n";
  for (int i = 0; i < table.size(); ++i) {
    out += CsvField(table.players[i]);
    for (const auto& cell : table.cells[i]) {
      out += "," + Fixed(cell.first, 2) + ";" + Fixed(cell.second, 2);
    }
    out += "," + Fixed(table.rt[i], 2) + "," + Fixed(table.total[i], 2) + "\n";
  }
  out += "ct";
  for (double v : table.ct) out += "," + Fixed(v, 2);
  out += ",,\n";
  return out;
}

CrossTable ParseCrossTableCsv(std::string_view text) {
  const std::vector<std::string> lines = Lines(text);
  if (lines.empty()) throw std::runtime_error("CSV: empty cross table");
  const std::vector<std::string> header = SplitCsvLine(lines[0]);
  if (header.size() < 3 || !header[0].empty() ||
      header[header.size() - 2] != "rt" || header.back() != "T") {
    throw std::runtime_error("CSV: bad cross table header");
  }
  CrossTable table;
  table.players.assign(header.begin() + 1, header.end() - 2);
  const int n = table.size();
  if (static_cast<int>(lines.size()) != n + 2) {
    throw std::runtime_error("CSV: expected one row per player and a ct row");
  }
  table.cells.assign(n, std::vector<CrossTable::Cell>(n));
  for (int i = 0; i < n; ++i) {
    const std::vector<std::string> f = SplitCsvLine(lines[i + 1]);
    if (static_cast<int>(f.size()) != n + 3 || f[0] != table.players[i]) {
      throw std::runtime_error("CSV: malformed row for " + table.players[i]);
    }
    table.rt.push_back(ParseDouble(f[n + 1], "rt"));
    table.total.push_back(ParseDouble(f[n + 2], "T"));
    for (int j = 0; j < n; ++j) {
      const std::string& cell = f[j + 1];
      const auto sep = cell.find(';');
      if (sep == std::string::npos) {
        throw std::runtime_error("CSV: cell '" + cell + "' lacks ';'");
      }
      table.cells[i][j] = {ParseDouble(cell.substr(0, sep), "cell"),
                           ParseDouble(cell.substr(sep + 1), "cell")};
    }
  }
  const std::vector<std::string> ct_row = SplitCsvLine(lines[n + 1]);
  if (ct_row.at(0) != "ct" || static_cast<int>(ct_row.size()) < n + 1) {
    throw std::runtime_error("CSV: missing ct row");
  }
  for (int j = 0; j < n; ++j) table.ct.push_back(ParseDouble(ct_row[j + 1], "ct"));

  // Stored totals are kept as written, but must agree with the cells up to
  // the rounding of every printed term.
  CrossTable check = table;
  check.RecomputeTotals();
  const double line_slack = 0.005 * (n + 1) + 1e-9;
  const double total_slack = 0.005 * (2 * n + 1) + 1e-9;
  for (int i = 0; i < n; ++i) {
    if (std::abs(check.rt[i] - table.rt[i]) > line_slack ||
        std::abs(check.ct[i] - table.ct[i]) > line_slack ||
        std::abs(check.total[i] - table.total[i]) > total_slack) {
      throw std::runtime_error("CSV: totals for " + table.players[i] +
                               " disagree with its cells");
    }
  }
  return table;
}

std::string RenderCrossTableMarkdown(const CrossTable& table) {
  std::string out = "| |";
  for (const auto& p : table.players) out += " " + p + " |";
  out += " rt | T |\n|---|";
  for (int j = 0; j < table.size() + 2; ++j) out += "---|";
  out += "\n";
  for (int i = 0; i < table.size(); ++i) {
    out += "| " + table.players[i] + " |";
    for (const auto& cell : table.cells[i]) {
      out += " " + Fixed(cell.first, 2) + "  " + Fixed(cell.second, 2) + " |";
    }
    out += " " + Fixed(table.rt[i], 2) + " | " + Fixed(table.total[i], 2) + " |\n";
  }
  out += "| ct |";
  for (double v : table.ct) out += " " + Fixed(v, 2) + " |";
  out += " | |\n";
  return out;
}

std::string RenderRankingCsv(std::span<const RankingRow> rows) {
  std::string out = "rank,player,mean_return,significant_lead\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += std::to_string(i + 1) + "," + CsvField(rows[i].player) + "," +
           Fixed(rows[i].mean_return, 4) + "," +
           (rows[i].significant_lead ? "1" : "0") + "\n";
  }
  return out;
}

std::vector<RankingRow> ParseRankingCsv(std::string_view text) {
  const std::vector<std::string> lines = Lines(text);
  if (lines.empty() || lines[0] != "rank,player,mean_return,significant_lead") {
    throw std::runtime_error("CSV: bad ranking header");
  }
  std::vector<RankingRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> f = SplitCsvLine(lines[i]);
    if (f.size() != 4 || f[0] != std::to_string(i) ||
        (f[3] != "0" && f[3] != "1")) {
      throw std::runtime_error("CSV: malformed ranking row " + std::to_string(i));
    }
    rows.push_back({f[1], ParseDouble(f[2], "mean_return"), f[3] == "1"});
  }
  return rows;
}

std::string RenderRankingMarkdown(std::span<const RankingRow> rows) {
  std::string out = "| | Player | Av. return | Significant lead |\n|---|---|---|---|\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "| " + std::to_string(i + 1) + " | " + rows[i].player + " | " +
           Fixed(rows[i].mean_return, 3) + " | " +
           (rows[i].significant_lead ? "yes" : "no") + " |\n";
  }
  return out;
}

}  // namespace rmg

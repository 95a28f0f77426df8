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

#include "rmg/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "rmg/errors.h"

namespace rmg {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string FormatTotal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string RenderReport(const ExperimentConfig& cfg, const GameSet& games,
                         const ExperimentReport& report,
                         const std::vector<RankingRow>& rows) {
  std::ostringstream md;
  md << "# Experiment report\n\n";
  md << "- players: " << cfg.players.size() << "\n";
  md << "- games: " << report.games_played << " of " << games.games.size()
     << " (" << games.n_actions << " actions, game seed " << games.seed << ")\n";
  md << "- steps per match: " << cfg.steps << "\n";
  md << "- seed: " << cfg.seed << "\n";
  md << "- elimination: " << (cfg.elimination.enabled ? "on" : "off");
  if (cfg.elimination.enabled) {
    md << " (min_games " << cfg.elimination.min_games << ", k "
       << cfg.elimination.significance_k << ", stagnation window "
       << cfg.elimination.stagnation_window << ")";
  }
  md << "\n\n## Cross table\n\n";
  md << RenderCrossTableMarkdown(BuildCrossTable(report.full_ledger, cfg.players));
  md << "\n## Ranking\n\n" << RenderRankingMarkdown(rows);
  if (!report.eliminations.empty()) {
    md << "\n## Eliminations\n\n| # | Player | After game | Av. return | Rule |\n"
          "|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < report.eliminations.size(); ++i) {
      const EliminationEvent& e = report.eliminations[i];
      char mean[32];
      std::snprintf(mean, sizeof(mean), "%.3f", e.mean_return);
      md << "| " << i + 1 << " | " << cfg.players[e.player] << " | "
         << e.after_game << " | " << mean << " | "
         << (e.by_stagnation ? "stagnation" : "significance") << " |\n";
    }
  }
  return md.str();
}

int DefaultThreads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

std::vector<RankingRow> RankingRows(const ExperimentReport& report,
                                    const std::vector<std::string>& names) {
  std::vector<RankingRow> rows;
  for (const Standing& s : report.standings) {
    rows.push_back({names.at(s.player), s.mean_return, s.significant_lead});
  }
  return rows;
}

void WriteExperimentOutputs(const ExperimentConfig& cfg, const GameSet& games,
                            const ExperimentReport& report, bool match_log) {
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  const std::vector<RankingRow> rows = RankingRows(report, cfg.players);
  WriteFile(dir / "crosstable.csv",
            RenderCrossTableCsv(BuildCrossTable(report.full_ledger, cfg.players)));
  WriteFile(dir / "ranking.csv", RenderRankingCsv(rows));
  WriteFile(dir / "report.md", RenderReport(cfg, games, report, rows));
  if (match_log) {
    std::string log;
    for (const auto& [key, r] : report.full_ledger.results()) {
      log += "game=" + std::to_string(r.game_index) +
             " row=" + cfg.players[r.row_player] +
             " col=" + cfg.players[r.col_player] +
             " steps=" + std::to_string(r.steps) +
             " total_row=" + FormatTotal(r.total_row) +
             " total_col=" + FormatTotal(r.total_col) + "\n";
    }
    WriteFile(dir / "matches.log", log);
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Repeated matrix game tournaments with hedging players", "rmg"};
  app.require_subcommand(1);

  int gen_games = 0, gen_actions = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random game set");
  gen->add_option("--games", gen_games, "Number of games")->required();
  gen->add_option("--actions", gen_actions, "Actions per player");
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--out", gen_out, "Output file")->required();

  std::string run_config, run_games_file;
  int run_threads = DefaultThreads();
  bool run_match_log = false;
  CLI::App* run = app.add_subcommand("run", "Run an experiment");
  run->add_option("--config", run_config, "Experiment config file")->required();
  run->add_option("--games-file", run_games_file, "Pre-generated RMG1 games");
  run->add_option("--threads", run_threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  run->add_flag("--match-log", run_match_log, "Also write matches.log");

  std::string project_in, project_out, project_name = "H";
  CLI::App* project =
      app.add_subcommand("project", "Add a perfect hedger to a cross table");
  project->add_option("--in", project_in, "crosstable.csv")->required();
  project->add_option("--out", project_out, "Output CSV")->required();
  project->add_option("--name", project_name, "Name of the added player");

  std::string grade_in, grade_player;
  CLI::App* grade = app.add_subcommand("grade", "League grade of a player");
  grade->add_option("--in", grade_in, "ranking.csv")->required();
  grade->add_option("--player", grade_player, "Player name")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) {
      const GameSet set = GenerateRandomGames(gen_games, gen_actions, gen_seed);
      std::ostringstream os;
      WriteGameSet(set, os);
      WriteFile(gen_out, os.str());
    } else if (run->parsed()) {
      ExperimentConfig cfg = ParseConfig(ReadFile(run_config));
      GameSet games;
      if (!run_games_file.empty()) {
        std::istringstream is(ReadFile(run_games_file));
        games = ReadGameSet(is);
        if (games.games.empty()) throw ConfigError("games file holds no games");
      } else {
        games = GenerateRandomGames(cfg.games, cfg.actions, cfg.seed);
      }
      const ExperimentReport report = RunExperiment(
          cfg.specs, games, cfg.steps, cfg.elimination, cfg.seed, run_threads);
      WriteExperimentOutputs(cfg, games, report, run_match_log);
      for (const RankingRow& row : RankingRows(report, cfg.players)) {
        char mean[32];
        std::snprintf(mean, sizeof(mean), "%.4f", row.mean_return);
        out << row.player << ' ' << mean << '\n';
      }
    } else if (project->parsed()) {
      const CrossTable base = ParseCrossTableCsv(ReadFile(project_in));
      if (base.IndexOf(project_name) >= 0) {
        throw ConfigError("player '" + project_name + "' already in the table");
      }
      WriteFile(project_out,
                RenderCrossTableCsv(PerfectHedgerProjection(base, project_name)));
    } else if (grade->parsed()) {
      const std::vector<RankingRow> rows = ParseRankingCsv(ReadFile(grade_in));
      auto it = std::find_if(rows.begin(), rows.end(), [&](const RankingRow& r) {
        return r.player == grade_player;
      });
      if (it == rows.end()) {
        throw ConfigError("player '" + grade_player + "' not in ranking");
      }
      const int rank = static_cast<int>(it - rows.begin()) + 1;
      out << ToString(GradeInLeague(rank, it->significant_lead,
                                    static_cast<int>(rows.size())))
          << '\n';
    }
  } catch (const std::exception& e) {
    err << "rmg: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace rmg

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

#ifndef RMG_CLI_H_
#define RMG_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "rmg/analysis.h"
#include "rmg/config.h"
#include "rmg/game.h"
#include "rmg/tournament.h"

namespace rmg {

// Entry point of the `rmg` tool; `args` excludes the program name.
//   gen     --games N --actions K --seed S --out FILE
//   run     --config FILE [--games-file FILE] [--threads N] [--match-log]
//   project --in crosstable.csv --out FILE [--name H]
//   grade   --in ranking.csv --player NAME
// Returns the process exit status.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Ranking rows for an experiment, using the configured display names.
std::vector<RankingRow> RankingRows(const ExperimentReport& report,
                                    const std::vector<std::string>& names);

// Writes crosstable.csv, ranking.csv and report.md into cfg.output_dir (and
// matches.log when requested).
void WriteExperimentOutputs(const ExperimentConfig& cfg, const GameSet& games,
                            const ExperimentReport& report, bool match_log);

}  // namespace rmg

#endif  // RMG_CLI_H_

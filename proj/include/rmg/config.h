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

#ifndef RMG_CONFIG_H_
#define RMG_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmg/ledger.h"
#include "rmg/player_spec.h"

namespace rmg {

struct ExperimentConfig {
  std::vector<std::string> players;  // expressions as written
  std::vector<PlayerSpec> specs;     // parsed, same order
  int games = 1000;
  int actions = 3;
  std::int64_t steps = 100000;
  std::uint64_t seed = 0;
  EliminationConfig elimination;
  std::string output_dir = "out";
};

// Line-oriented "key = value" file; '#' starts a comment. Keys: players
// (comma-separated expressions), games, actions, steps, seed, elimination,
// min_games, significance_k, stagnation_window, output_dir. Unknown or
// duplicate keys and unparsable values throw ConfigError naming the line.
ExperimentConfig ParseConfig(std::string_view text);

// Splits on commas that are not nested inside parentheses or braces.
std::vector<std::string> SplitTopLevel(std::string_view text);

}  // namespace rmg

#endif  // RMG_CONFIG_H_

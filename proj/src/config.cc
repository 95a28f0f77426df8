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

#include "rmg/config.h"

#include <charconv>
#include <set>
#include <sstream>

#include "rmg/errors.h"
#include "rmg/parser.h"

namespace rmg {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T ParseInteger(const std::string& value, int line) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("line " + std::to_string(line) + ": bad integer '" +
                      value + "'");
  }
  return out;
}

double ParseReal(const std::string& value, int line) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("line " + std::to_string(line) + ": bad number '" +
                      value + "'");
  }
  return out;
}

bool ParseBool(const std::string& value, int line) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("line " + std::to_string(line) + ": bad boolean '" + value +
                    "'");
}

}  // namespace

std::vector<std::string> SplitTopLevel(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(Trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(Trim(text.substr(start)));
  return parts;
}

ExperimentConfig ParseConfig(std::string_view text) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  bool have_players = false;
  std::istringstream is{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    const std::string content = Trim(raw);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
    }
    const std::string key = Trim(std::string_view(content).substr(0, eq));
    const std::string value = Trim(std::string_view(content).substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(line) + ": duplicate key '" +
                        key + "'");
    }
    if (key == "players") {
      cfg.players.clear();
      cfg.specs.clear();
      for (const std::string& expr : SplitTopLevel(value)) {
        if (expr.empty()) {
          throw ConfigError("line " + std::to_string(line) + ": empty player");
        }
        try {
          cfg.specs.push_back(ParsePlayerExpr(expr));
        } catch (const ConfigError& e) {
          throw ConfigError("line " + std::to_string(line) + ": player '" +
                            expr + "' " + e.what());
        }
        cfg.players.push_back(expr);
      }
      have_players = true;
    } else if (key == "games") {
      cfg.games = ParseInteger<int>(value, line);
    } else if (key == "actions") {
      cfg.actions = ParseInteger<int>(value, line);
    } else if (key == "steps") {
      cfg.steps = ParseInteger<std::int64_t>(value, line);
    } else if (key == "seed") {
      cfg.seed = ParseInteger<std::uint64_t>(value, line);
    } else if (key == "elimination") {
      cfg.elimination.enabled = ParseBool(value, line);
    } else if (key == "min_games") {
      cfg.elimination.min_games = ParseInteger<int>(value, line);
    } else if (key == "significance_k") {
      cfg.elimination.significance_k = ParseReal(value, line);
    } else if (key == "stagnation_window") {
      cfg.elimination.stagnation_window = ParseInteger<int>(value, line);
    } else if (key == "output_dir") {
      if (value.empty()) {
        throw ConfigError("line " + std::to_string(line) + ": empty output_dir");
      }
      cfg.output_dir = value;
    } else {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" +
                        key + "'");
    }
  }
  if (!have_players) throw ConfigError("config: missing 'players'");
  if (cfg.players.size() < 2) throw ConfigError("config: need at least 2 players");
  if (cfg.games < 1) throw ConfigError("config: games must be >= 1");
  if (cfg.steps < 1) throw ConfigError("config: steps must be >= 1");
  if (cfg.actions < 2) throw ConfigError("config: actions must be >= 2");
  cfg.elimination.Validate();
  return cfg;
}

}  // namespace rmg

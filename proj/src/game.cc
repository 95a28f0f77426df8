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

#include "rmg/game.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rmg/random.h"

namespace rmg {

PayoffMatrix::PayoffMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : n_(static_cast<int>(rows.size())) {
  data_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) {
      throw std::invalid_argument("PayoffMatrix: rows must form a square");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

PayoffMatrix PayoffMatrix::Transposed() const {
  PayoffMatrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

MatrixGame::MatrixGame(PayoffMatrix payoff_row, PayoffMatrix payoff_col)
    : payoff_row_(std::move(payoff_row)), payoff_col_(std::move(payoff_col)) {
  if (payoff_row_.size() < 2 || payoff_row_.size() != payoff_col_.size()) {
    throw std::invalid_argument(
        "MatrixGame: both matrices must be K x K with K >= 2");
  }
  const int k = payoff_row_.size();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (double v : {payoff_row_(i, j), payoff_col_(i, j)}) {
        if (!(v >= kMinPayoff && v <= kMaxPayoff)) {
          throw std::invalid_argument("MatrixGame: payoff outside [-9, 9]");
        }
      }
    }
  }
}

PayoffMatrix MatrixGame::OwnPayoffs(Role role) const {
  return role == Role::kRow ? payoff_row_ : payoff_col_.Transposed();
}

PayoffMatrix MatrixGame::OpponentPayoffs(Role role) const {
  return role == Role::kRow ? payoff_col_ : payoff_row_.Transposed();
}

GameSet GenerateRandomGames(int n, int k, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("GenerateRandomGames: n < 0");
  if (k < 2) throw std::invalid_argument("GenerateRandomGames: k < 2");
  Rng rng(seed);
  GameSet set;
  set.seed = seed;
  set.n_actions = k;
  set.games.reserve(n);
  for (int g = 0; g < n; ++g) {
    PayoffMatrix row(k), col(k);
    for (PayoffMatrix* m : {&row, &col}) {
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          (*m)(i, j) = rng.Uniform(kMinPayoff, kMaxPayoff);
        }
      }
    }
    set.games.emplace_back(std::move(row), std::move(col));
  }
  return set;
}

namespace {

void WriteMatrix(const PayoffMatrix& m, std::ostream& os) {
  char buf[32];
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.6f", m(i, j));
      if (j > 0) os << ' ';
      os << buf;
    }
    os << '\n';
  }
}

[[noreturn]] void FormatError(int line, const std::string& what) {
  throw std::runtime_error("RMG1 line " + std::to_string(line) + ": " + what);
}

PayoffMatrix ReadMatrix(std::istream& is, int k, int& line_no) {
  PayoffMatrix m(k);
  std::string line;
  for (int i = 0; i < k; ++i) {
    ++line_no;
    if (!std::getline(is, line)) FormatError(line_no, "unexpected end of file");
    std::istringstream ls(line);
    for (int j = 0; j < k; ++j) {
      std::string tok;
      if (!(ls >> tok)) FormatError(line_no, "expected " + std::to_string(k) + " values");
      char* end = nullptr;
      m(i, j) = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0') FormatError(line_no, "bad number '" + tok + "'");
    }
    std::string extra;
    if (ls >> extra) FormatError(line_no, "too many values");
  }
  return m;
}

}  // namespace

void WriteGameSet(const GameSet& set, std::ostream& os) {
  os << "RMG1 games=" << set.games.size() << " actions=" << set.n_actions
     << " seed=" << set.seed << '\n';
  for (std::size_t g = 0; g < set.games.size(); ++g) {
    os << "game " << g << '\n';
    WriteMatrix(set.games[g].payoff_row(), os);
    WriteMatrix(set.games[g].payoff_col(), os);
  }
}

GameSet ReadGameSet(std::istream& is) {
  std::string line;
  int line_no = 1;
  if (!std::getline(is, line)) FormatError(line_no, "empty input");
  long long n = 0, k = 0;
  unsigned long long seed = 0;
  if (std::sscanf(line.c_str(), "RMG1 games=%lld actions=%lld seed=%llu", &n,
                  &k, &seed) != 3) {
    FormatError(line_no, "bad header '" + line + "'");
  }
  if (n < 0 || k < 2) FormatError(line_no, "invalid games/actions count");
  GameSet set;
  set.seed = seed;
  set.n_actions = static_cast<int>(k);
  for (long long g = 0; g < n; ++g) {
    ++line_no;
    if (!std::getline(is, line) || line != "game " + std::to_string(g)) {
      FormatError(line_no, "expected 'game " + std::to_string(g) + "'");
    }
    PayoffMatrix row = ReadMatrix(is, set.n_actions, line_no);
    PayoffMatrix col = ReadMatrix(is, set.n_actions, line_no);
    try {
      set.games.emplace_back(std::move(row), std::move(col));
    } catch (const std::invalid_argument& e) {
      FormatError(line_no, e.what());
    }
  }
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty()) FormatError(line_no, "trailing content");
  }
  return set;
}

void MixedStrategy::Validate(int n_actions) const {
  if (static_cast<int>(probs.size()) != n_actions) {
    throw std::invalid_argument("MixedStrategy: wrong length");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("MixedStrategy: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("MixedStrategy: entries do not sum to 1");
  }
}

std::vector<int> BestResponsePure(const PayoffMatrix& own_payoffs,
                                  int opponent_action) {
  const int k = own_payoffs.size();
  if (opponent_action < 0 || opponent_action >= k) {
    throw std::invalid_argument("BestResponsePure: opponent action out of range");
  }
  double best = own_payoffs(0, opponent_action);
  for (int i = 1; i < k; ++i) best = std::max(best, own_payoffs(i, opponent_action));
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    if (own_payoffs(i, opponent_action) == best) out.push_back(i);
  }
  return out;
}

int BullyAction(const PayoffMatrix& own_payoffs,
                const PayoffMatrix& opp_payoffs) {
  const int k = own_payoffs.size();
  if (opp_payoffs.size() != k) {
    throw std::invalid_argument("BullyAction: matrices are not conformable");
  }
  int best_action = 0;
  double best_value = 0.0;
  for (int i = 0; i < k; ++i) {
    double opp_best = opp_payoffs(i, 0);
    for (int j = 1; j < k; ++j) opp_best = std::max(opp_best, opp_payoffs(i, j));
    double value = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
      if (opp_payoffs(i, j) == opp_best) value = std::min(value, own_payoffs(i, j));
    }
    if (i == 0 || value > best_value) {
      best_action = i;
      best_value = value;
    }
  }
  return best_action;
}

double ExpectedPayoff(const PayoffMatrix& matrix, const MixedStrategy& sigma_row,
                      const MixedStrategy& sigma_col) {
  const int k = matrix.size();
  if (static_cast<int>(sigma_row.probs.size()) != k ||
      static_cast<int>(sigma_col.probs.size()) != k) {
    throw std::invalid_argument("ExpectedPayoff: dimension mismatch");
  }
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      total += sigma_row.probs[i] * sigma_col.probs[j] * matrix(i, j);
    }
  }
  return total;
}

MixedStrategy PureStrategy(int n_actions, int action) {
  MixedStrategy s{std::vector<double>(n_actions, 0.0)};
  s.probs.at(action) = 1.0;
  return s;
}

MixedStrategy UniformStrategy(int n_actions) {
  return MixedStrategy{std::vector<double>(n_actions, 1.0 / n_actions)};
}

}  // namespace rmg

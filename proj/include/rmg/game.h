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

#ifndef RMG_GAME_H_
#define RMG_GAME_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace rmg {

inline constexpr double kMinPayoff = -9.0;
inline constexpr double kMaxPayoff = 9.0;

// Dense square matrix, row-major. Entry (i, j) is indexed by the owner's
// action i and the opponent's action j unless stated otherwise.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  explicit PayoffMatrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}
  PayoffMatrix(std::initializer_list<std::initializer_list<double>> rows);

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[Index(i, j)]; }
  double& operator()(int i, int j) { return data_[Index(i, j)]; }

  std::span<const double> Row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  PayoffMatrix Transposed() const;

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<double> data_;
};

enum class Role { kRow, kColumn };

// Two-player K x K game. payoff_row(i, j) and payoff_col(i, j) are the row and
// column player's returns when the row player plays i and the column player j.
class MatrixGame {
 public:
  MatrixGame(PayoffMatrix payoff_row, PayoffMatrix payoff_col);

  int n_actions() const { return payoff_row_.size(); }
  const PayoffMatrix& payoff_row() const { return payoff_row_; }
  const PayoffMatrix& payoff_col() const { return payoff_col_; }

  // Payoffs of the player in `role`, indexed [own action][opponent action].
  PayoffMatrix OwnPayoffs(Role role) const;
  // Payoffs of the opponent of `role`, indexed [own action][opponent action].
  PayoffMatrix OpponentPayoffs(Role role) const;

  friend bool operator==(const MatrixGame&, const MatrixGame&) = default;

 private:
  PayoffMatrix payoff_row_;
  PayoffMatrix payoff_col_;
};

struct GameSet {
  std::vector<MatrixGame> games;
  std::uint64_t seed = 0;
  int n_actions = 0;
};

// n games with every entry i.i.d. uniform on [kMinPayoff, kMaxPayoff].
// Bit-identical for identical (n, k, seed).
GameSet GenerateRandomGames(int n, int k, std::uint64_t seed);

// "RMG1" text format; values written with 6 fractional digits.
void WriteGameSet(const GameSet& set, std::ostream& os);
GameSet ReadGameSet(std::istream& is);

struct MixedStrategy {
  std::vector<double> probs;

  // Throws std::invalid_argument unless the vector is a distribution.
  void Validate(int n_actions) const;
};

struct MaximinSolution {
  double value = 0.0;
  MixedStrategy strategy;
};

// Indices i maximizing own_payoffs(i, opponent_action).
std::vector<int> BestResponsePure(const PayoffMatrix& own_payoffs,
                                  int opponent_action);

// Mixed security strategy: max over sigma of min over opponent pure j.
MaximinSolution MaximinSolve(const PayoffMatrix& own_payoffs);

// Best row against a best-responding opponent. The opponent breaks its ties
// against us; our own ties go to the lowest index.
int BullyAction(const PayoffMatrix& own_payoffs,
                const PayoffMatrix& opp_payoffs);

double ExpectedPayoff(const PayoffMatrix& matrix, const MixedStrategy& sigma_row,
                      const MixedStrategy& sigma_col);

MixedStrategy PureStrategy(int n_actions, int action);
MixedStrategy UniformStrategy(int n_actions);

}  // namespace rmg

#endif  // RMG_GAME_H_

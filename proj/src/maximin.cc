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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rmg/game.h"

namespace rmg {
namespace {

constexpr double kPivotEps = 1e-12;

// Dense tableau simplex with Bland's rule for
//   maximize sum(y)  s.t.  A y <= 1, y >= 0,   A > 0 elementwise.
// The origin is feasible so no phase one is needed. On return `duals` holds
// the optimal dual variables (the reduced costs of the slack columns).
double SolvePositiveLp(const PayoffMatrix& a, std::vector<double>& duals) {
  const int m = a.size();       // constraints
  const int n = a.size();       // structural variables
  const int cols = n + m + 1;   // structurals, slacks, rhs
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a(i, j);
    t[i][n + i] = 1.0;
    t[i][cols - 1] = 1.0;
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) t[m][j] = -1.0;

  for (int iter = 0; iter < 10000; ++iter) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (t[m][j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] > kPivotEps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    // Bounded because A > 0; an unbounded column would be a bug upstream.
    if (leave < 0) throw std::logic_error("MaximinSolve: unbounded LP");
    const double pivot = t[leave][enter];
    for (double& x : t[leave]) x /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  duals.assign(m, 0.0);
  for (int i = 0; i < m; ++i) duals[i] = std::max(0.0, t[m][n + i]);
  return t[m][cols - 1];
}

}  // namespace

MaximinSolution MaximinSolve(const PayoffMatrix& own_payoffs) {
  const int k = own_payoffs.size();
  if (k < 1) throw std::invalid_argument("MaximinSolve: empty matrix");
  double lowest = own_payoffs(0, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) lowest = std::min(lowest, own_payoffs(i, j));
  }
  // Shift so every entry is >= 1; the game value shifts by the same amount.
  const double shift = 1.0 - lowest;
  PayoffMatrix shifted(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) shifted(i, j) = own_payoffs(i, j) + shift;
  }

  std::vector<double> duals;
  const double objective = SolvePositiveLp(shifted, duals);
  double dual_sum = 0.0;
  for (double d : duals) dual_sum += d;

  MaximinSolution solution;
  solution.strategy.probs.resize(k);
  for (int i = 0; i < k; ++i) solution.strategy.probs[i] = duals[i] / dual_sum;
  solution.value = 1.0 / objective - shift;
  return solution;
}

}  // namespace rmg

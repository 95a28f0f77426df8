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

#ifndef RMG_TESTS_TEST_UTIL_H_
#define RMG_TESTS_TEST_UTIL_H_

// Generators shared by the property tests.

#include <map>
#include <string>
#include <vector>

#include "rmg/game.h"
#include "rmg/hedge.h"
#include "rmg/player_spec.h"
#include "rmg/random.h"

namespace rmg::testing {

inline PayoffMatrix RandomMatrix(Rng& rng, int k) {
  PayoffMatrix m(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = rng.Uniform(kMinPayoff, kMaxPayoff);
  }
  return m;
}

// Integer-valued matrices, so ties actually occur.
inline PayoffMatrix RandomIntegerMatrix(Rng& rng, int k, int lo = -3, int hi = 3) {
  PayoffMatrix m(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = lo + rng.UniformInt(hi - lo + 1);
  }
  return m;
}

inline MatrixGame RandomGame(Rng& rng, int k) {
  return MatrixGame(RandomMatrix(rng, k), RandomMatrix(rng, k));
}

inline PlayerSpec RandomBaseSpec(Rng& rng, bool reward_only = false) {
  static const Algorithm kAll[] = {
      Algorithm::kR, Algorithm::kG,  Algorithm::kB, Algorithm::kMinMax,
      Algorithm::kF, Algorithm::kJ,  Algorithm::kQ, Algorithm::kS,
      Algorithm::kU, Algorithm::kExp3, Algorithm::kM3};
  static const Algorithm kRewardOnly[] = {Algorithm::kR, Algorithm::kQ,
                                          Algorithm::kS, Algorithm::kU,
                                          Algorithm::kExp3};
  const Algorithm a = reward_only ? kRewardOnly[rng.UniformInt(5)]
                                  : kAll[rng.UniformInt(11)];
  PlayerSpec spec = PlayerSpec::Base(a);
  if (SupportsHeuristics(a)) {
    spec.window = rng.Bernoulli(0.3);
    spec.state = !reward_only && rng.Bernoulli(0.3);
  }
  const auto keys = AllowedParameters(a);
  for (const auto& key : keys) {
    if (!rng.Bernoulli(0.25)) continue;
    double v = 0.5;
    if (key == "C") {
      v = static_cast<double>(rng.UniformInt(200));
    } else if (key == "alpha" && a == Algorithm::kS) {
      v = rng.Uniform(-9.0, 12.0);
    } else if (key == "gamma" && a != Algorithm::kExp3) {
      v = rng.Uniform(0.0, 0.99);
    } else {
      v = rng.Uniform(0.001, 1.0);
    }
    spec.params[std::string(key)] = v;
  }
  return spec;
}

// A valid spec tree of hedge depth <= max_depth.
inline PlayerSpec RandomSpecTree(Rng& rng, int max_depth) {
  if (max_depth == 0 || rng.Bernoulli(0.45)) return RandomBaseSpec(rng);
  PlayerSpec top = RandomBaseSpec(rng, /*reward_only=*/true);
  std::vector<PlayerSpec> experts;
  const int n = 2 + rng.UniformInt(2);
  for (int i = 0; i < n; ++i) experts.push_back(RandomSpecTree(rng, max_depth - 1));
  return PlayerSpec::Hedge(std::move(top), std::move(experts));
}

inline PlayerSpec RandomHedgeTree(Rng& rng, int max_depth) {
  PlayerSpec spec;
  do {
    spec = RandomSpecTree(rng, max_depth);
  } while (!spec.is_hedge());
  return spec;
}

// Snapshots of every expert, at every nesting level, that is not on the path
// chosen in the current step.
inline void CollectUnchosen(const HedgePlayer& h, std::vector<std::string>& out) {
  const int chosen = h.last_chosen().value_or(-1);
  for (int k = 0; k < h.n_experts(); ++k) {
    if (k == chosen) {
      if (auto* nested = dynamic_cast<const HedgePlayer*>(&h.expert(k))) {
        CollectUnchosen(*nested, out);
      }
    } else {
      out.push_back(h.expert(k).StateSnapshot());
    }
  }
}

// Plays a hedge as the row player against a uniformly random opponent and
// counts steps where an unchosen expert's state moved between select and the
// end of observe. Returns the number of violations.
inline int CountFreezeViolations(HedgePlayer& h, const MatrixGame& game,
                                 int steps, std::uint64_t seed) {
  const int k = game.n_actions();
  h.Init(FilterView(FullGameView(game, Role::kRow), h.needs()), seed);
  Rng opp(DeriveSeed(seed, 99));
  std::vector<double> cf(k);
  int violations = 0;
  for (int t = 1; t <= steps; ++t) {
    std::vector<std::string> full_before;
    for (int e = 0; e < h.n_experts(); ++e) {
      full_before.push_back(h.expert(e).StateSnapshot());
    }
    const int a = h.SelectAction({t, k});
    std::vector<std::string> before;
    CollectUnchosen(h, before);
    // Unchosen top-level experts may not move during select either.
    const int chosen = *h.last_chosen();
    for (int e = 0; e < h.n_experts(); ++e) {
      if (e != chosen && h.expert(e).StateSnapshot() != full_before[e]) {
        ++violations;
      }
    }
    const int b = opp.UniformInt(k);
    for (int i = 0; i < k; ++i) cf[i] = game.payoff_row()(i, b);
    h.Observe({a, game.payoff_row()(a, b), b, cf});
    std::vector<std::string> after;
    CollectUnchosen(h, after);
    if (after != before) ++violations;
  }
  return violations;
}

}  // namespace rmg::testing

#endif  // RMG_TESTS_TEST_UTIL_H_

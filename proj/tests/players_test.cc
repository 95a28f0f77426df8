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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "rmg/errors.h"
#include "rmg/factory.h"
#include "rmg/players.h"
#include "test_util.h"

namespace rmg {
namespace {

const char* const kAllBase[] = {"R", "G", "B", "MinMax", "F", "J", "Q",
                                "S", "U", "Exp3", "M3"};

PlayerSpec Spec(Algorithm a, bool w = false, bool s = false) {
  return PlayerSpec::Base(a, w, s);
}

std::vector<PlayerSpec> AllBaseSpecs() {
  std::vector<PlayerSpec> out;
  for (const char* name : kAllBase) out.push_back(Spec(*AlgorithmFromName(name)));
  for (Algorithm a : {Algorithm::kU, Algorithm::kQ, Algorithm::kJ}) {
    out.push_back(Spec(a, true, false));
    out.push_back(Spec(a, false, true));
    out.push_back(Spec(a, true, true));
  }
  return out;
}

struct Perturbation {
  bool matrix = false;
  bool opponent_action = false;
  bool counterfactuals = false;
};

// Plays `steps` rounds as the row player against uniformly random column
// actions drawn from `opp_seed`. Fields flagged in `perturb` are replaced by
// noise before reaching the player.
std::vector<int> Drive(Player& p, const MatrixGame& game, int steps,
                       std::uint64_t seed, std::uint64_t opp_seed,
                       const Perturbation& perturb = {}) {
  const int k = game.n_actions();
  Rng noise(opp_seed ^ 0x5555);
  GameView view = FilterView(FullGameView(game, Role::kRow), p.needs());
  if (perturb.matrix) {
    view.own_payoffs = testing::RandomMatrix(noise, k);
    view.opponent_payoffs = testing::RandomMatrix(noise, k);
  }
  p.Init(view, seed);
  Rng opp(opp_seed);
  std::vector<int> actions;
  std::vector<double> cf(k);
  for (int t = 1; t <= steps; ++t) {
    const int a = p.SelectAction({t, k});
    const int b = opp.UniformInt(k);
    actions.push_back(a);
    for (int i = 0; i < k; ++i) cf[i] = game.payoff_row()(i, b);
    Observation obs{a, game.payoff_row()(a, b), b, cf};
    if (perturb.opponent_action) obs.opponent_action = noise.UniformInt(k);
    if (perturb.counterfactuals) {
      for (int i = 0; i < k; ++i) {
        if (i != a) cf[i] = noise.Uniform(-9, 9);
      }
    }
    p.Observe(obs);
  }
  return actions;
}

MatrixGame PdGame() {
  return MatrixGame(PayoffMatrix{{3, 0}, {5, 1}}, PayoffMatrix{{3, 5}, {0, 1}});
}

TEST_CASE("declared information needs") {
  CHECK(MakePlayer(Spec(Algorithm::kR))->needs().RewardOnly());
  CHECK(MakePlayer(Spec(Algorithm::kS))->needs().RewardOnly());
  CHECK(MakePlayer(Spec(Algorithm::kU))->needs().RewardOnly());
  CHECK(MakePlayer(Spec(Algorithm::kQ))->needs().RewardOnly());
  CHECK(MakePlayer(Spec(Algorithm::kExp3))->needs().RewardOnly());
  for (Algorithm a : {Algorithm::kG, Algorithm::kB, Algorithm::kMinMax,
                      Algorithm::kM3}) {
    CHECK(MakePlayer(Spec(a))->needs().needs_matrix);
  }
  const InformationNeeds f = MakePlayer(Spec(Algorithm::kF))->needs();
  CHECK(f.needs_opponent_action);
  CHECK_FALSE(f.needs_matrix);
  const InformationNeeds j = MakePlayer(Spec(Algorithm::kJ))->needs();
  CHECK(j.needs_counterfactuals);
  CHECK_FALSE(j.needs_matrix);
  CHECK_FALSE(j.needs_opponent_action);
  CHECK(MakePlayer(Spec(Algorithm::kU, false, true))->needs().needs_opponent_action);
}

TEST_CASE("filtering strips undeclared fields") {
  const MatrixGame g = PdGame();
  const GameView none = FilterView(FullGameView(g, Role::kRow), {});
  CHECK_FALSE(none.own_payoffs.has_value());
  CHECK_FALSE(none.opponent_payoffs.has_value());
  const std::vector<double> cf{1.0, 2.0};
  const Observation full{1, 2.0, 0, cf};
  const Observation stripped = FilterObservation(full, {});
  CHECK_FALSE(stripped.opponent_action.has_value());
  CHECK(stripped.counterfactual_rewards.empty());
  CHECK(stripped.reward == 2.0);
}

TEST_CASE("greedy plays the best response to the last opponent action") {
  const MatrixGame g(PayoffMatrix{{2, 0, 0}, {5, 0, 0}, {-1, 0, 0}}, PayoffMatrix(3));
  auto p = MakePlayer(Spec(Algorithm::kG));
  p->Init(FullGameView(g, Role::kRow), 1);
  p->SelectAction({1, 3});
  p->Observe({2, -1.0, 0, {}});
  for (int t = 2; t < 50; ++t) CHECK(p->SelectAction({t, 3}) == 1);
}

TEST_CASE("greedy is uniform before any observation") {
  const MatrixGame g(PayoffMatrix{{2, 0, 0}, {5, 0, 0}, {-1, 0, 0}}, PayoffMatrix(3));
  int hits[3] = {0, 0, 0};
  for (std::uint64_t s = 0; s < 3000; ++s) {
    GreedyPlayer p;
    p.Init(FullGameView(g, Role::kRow), s);
    ++hits[p.SelectAction({1, 3})];
  }
  for (int h : hits) CHECK(std::abs(h / 3000.0 - 1.0 / 3) < 0.04);
}

TEST_CASE("bully always plays the bully action") {
  auto p = MakePlayer(Spec(Algorithm::kB));
  p->Init(FullGameView(PdGame(), Role::kRow), 3);
  for (int t = 1; t < 100; ++t) CHECK(p->SelectAction({t, 2}) == 1);
}

TEST_CASE("minmax samples its maximin strategy") {
  const MatrixGame g(PayoffMatrix{{9, -9}, {-9, 9}}, PayoffMatrix{{-9, 9}, {9, -9}});
  MinMaxPlayer p;
  p.Init(FullGameView(g, Role::kRow), 17);
  int zeros = 0;
  for (int t = 1; t <= 10000; ++t) zeros += p.SelectAction({t, 2}) == 0;
  CHECK(std::abs(zeros / 10000.0 - 0.5) <= 0.02);
}

TEST_CASE("matrix players reject a view without the matrix") {
  for (Algorithm a : {Algorithm::kG, Algorithm::kB, Algorithm::kMinMax,
                      Algorithm::kM3}) {
    auto p = MakePlayer(Spec(a));
    GameView view;
    view.n_actions = 2;
    CHECK_THROWS_AS(p->Init(view, 0), ConfigError);
  }
}

TEST_CASE("fictitious play bookkeeping") {
  FictitiousPlayer p;
  GameView view;
  view.n_actions = 2;
  p.Init(view, 0);
  CHECK(p.estimate(0, 0) == 9.0);
  CHECK(p.estimate(1, 1) == 9.0);
  p.Observe({0, 4.0, 0, {}});
  p.Observe({0, 4.0, 0, {}});
  p.Observe({1, -2.0, 1, {}});
  p.Observe({0, 4.0, 0, {}});
  CHECK(p.opponent_counts()[0] == 3);
  CHECK(p.opponent_counts()[1] == 1);
  CHECK(p.estimate(0, 0) == 4.0);
  CHECK(p.estimate(1, 1) == -2.0);
  CHECK(p.estimate(0, 1) == 9.0);
  // Values: row 0 = 0.75*4 + 0.25*9 = 5.25, row 1 = 0.75*9 + 0.25*(-2) = 6.25.
  CHECK(p.SelectAction({5, 2}) == 1);
}

TEST_CASE("fictitious play converges to a best response against a constant opponent") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const MatrixGame g = testing::RandomGame(rng, 3);
    FictitiousPlayer p;
    p.Init(FilterView(FullGameView(g, Role::kRow), p.needs()), trial);
    int last = -1;
    for (int t = 1; t <= 50; ++t) {
      last = p.SelectAction({t, 3});
      p.Observe({last, g.payoff_row()(last, 0), 0, {}});
    }
    const auto br = BestResponsePure(g.payoff_row(), 0);
    CHECK(std::find(br.begin(), br.end(), last) != br.end());
  }
}

TEST_CASE("cumulative return examples") {
  CumulativeReturnPlayer p;
  GameView view;
  view.n_actions = 2;
  p.Init(view, 0);
  const std::vector<double> a{1, 2}, b{3, 0};
  p.Observe({0, 1.0, std::nullopt, a});
  p.Observe({0, 3.0, std::nullopt, b});
  CHECK(p.scores(0)[0] == 4.0);
  CHECK(p.scores(0)[1] == 2.0);
  CHECK(p.SelectAction({3, 2}) == 0);

  CumulativeReturnPlayer w(HeuristicFlags{true, false, 0.01});
  w.Init(view, 0);
  // Window from zero: 0.01*1 + ..., so build (4, 2) directly by blending.
  const std::vector<double> zero{0, 0};
  for (int i = 0; i < 1; ++i) w.Observe({0, 0.0, std::nullopt, zero});
  CHECK(w.scores(0)[0] == 0.0);

  CHECK_THROWS_AS(p.Observe({0, 1.0, std::nullopt, {}}), ConfigError);
}

TEST_CASE("cumulative return window decay") {
  // Scores (4, 2) followed by counterfactuals (0, 0) decay to (3.96, 1.98).
  const double a = 0.01;
  CumulativeReturnPlayer w(HeuristicFlags{true, false, a});
  GameView view;
  view.n_actions = 2;
  w.Init(view, 0);
  const std::vector<double> big{4.0 / a, 2.0 / a}, zero{0, 0};
  w.Observe({0, 4.0 / a, std::nullopt, big});
  CHECK(std::abs(w.scores(0)[0] - 4.0) < 1e-12);
  CHECK(std::abs(w.scores(0)[1] - 2.0) < 1e-12);
  w.Observe({0, 0.0, std::nullopt, zero});
  CHECK(std::abs(w.scores(0)[0] - 3.96) < 1e-9);
  CHECK(std::abs(w.scores(0)[1] - 1.98) < 1e-9);
  CHECK(w.SelectAction({3, 2}) == 0);
}

TEST_CASE("cumulative return ties are uniform") {
  GameView view;
  view.n_actions = 3;
  int hits[3] = {0, 0, 0};
  for (std::uint64_t s = 0; s < 3000; ++s) {
    CumulativeReturnPlayer p;
    p.Init(view, s);
    ++hits[p.SelectAction({1, 3})];
  }
  for (int h : hits) CHECK(std::abs(h / 3000.0 - 1.0 / 3) < 0.04);
}

TEST_CASE("cumulative return argmax is invariant under a constant shift") {
  Rng rng(41);
  GameView view;
  view.n_actions = 3;
  for (int trial = 0; trial < 100; ++trial) {
    CumulativeReturnPlayer a, b;
    a.Init(view, trial);
    b.Init(view, trial);
    // Dyadic shifts keep the sums exact.
    const double shift = (rng.UniformInt(41) - 20) * 0.25;
    for (int t = 1; t <= 30; ++t) {
      std::vector<double> cf(3), shifted(3);
      for (int i = 0; i < 3; ++i) {
        cf[i] = rng.UniformInt(5) - 2;
        shifted[i] = cf[i] + shift;
      }
      const int x = a.SelectAction({t, 3});
      const int y = b.SelectAction({t, 3});
      CHECK(x == y);
      a.Observe({x, cf[x], std::nullopt, cf});
      b.Observe({y, shifted[y], std::nullopt, shifted});
      auto best_of = [](std::span<const double> s) {
        std::vector<int> out;
        const double m = *std::max_element(s.begin(), s.end());
        for (int i = 0; i < 3; ++i) {
          if (s[i] == m) out.push_back(i);
        }
        return out;
      };
      CHECK(best_of(a.scores(0)) == best_of(b.scores(0)));
    }
  }
}

TEST_CASE("q learner uses 1/t and a single state by default") {
  QLearner q;
  GameView view;
  view.n_actions = 2;
  q.Init(view, 0);
  q.SelectAction({1, 2});
  q.Observe({1, 4.0, std::nullopt, {}});
  CHECK(q.q_table().n_states() == 1);
  CHECK(q.q_table()(0, 1) == 4.0);
  q.SelectAction({2, 2});
  q.Observe({1, 0.0, std::nullopt, {}});
  // alpha = 1/2: 4 + 0.5 * (0 + 0.95*4 - 4) = 3.9
  CHECK(std::abs(q.q_table()(0, 1) - 3.9) < 1e-12);
}

TEST_CASE("q learner window uses the constant window rate") {
  QLearner q(QParams{0.95, std::nullopt, HeuristicFlags{true, false, 0.01}});
  GameView view;
  view.n_actions = 2;
  q.Init(view, 0);
  q.SelectAction({1, 2});
  q.Observe({0, 5.0, std::nullopt, {}});
  CHECK(std::abs(q.q_table()(0, 0) - 0.05) < 1e-12);
}

TEST_CASE("satisficing player starts with the configured aspiration") {
  SatisficingPlayer s;
  GameView view;
  view.n_actions = 3;
  s.Init(view, 2);
  CHECK(s.aspiration() == 12.0);
  const int a = s.SelectAction({1, 3});
  s.Observe({a, 5.0, std::nullopt, {}});
  CHECK(std::abs(s.aspiration() - 11.93) < 1e-12);
  CHECK(s.SelectAction({2, 3}) != a);
}

TEST_CASE("ucb tries every action once first") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + rng.UniformInt(5);
    UcbPlayer u;
    GameView view;
    view.n_actions = k;
    u.Init(view, trial);
    std::vector<int> seen(k, 0);
    for (int t = 1; t <= k; ++t) {
      const int a = u.SelectAction({t, k});
      ++seen[a];
      u.Observe({a, rng.Uniform(-9, 9), std::nullopt, {}});
    }
    for (int c : seen) CHECK(c == 1);
  }
}

TEST_CASE("ucb with state keeps per-state counts") {
  UcbPlayer u(UcbParams{100.0, HeuristicFlags{true, true, 0.01}});
  GameView view;
  view.n_actions = 3;
  u.Init(view, 0);
  for (int t = 1; t <= 60; ++t) {
    const int a = u.SelectAction({t, 3});
    u.Observe({a, 1.0, 0, {}});  // opponent always 0
  }
  // States (a, 0) were visited; state (1, 2) = 5 never was.
  for (int a = 0; a < 3; ++a) {
    CHECK(u.estimate(5, a).count == 0);
    CHECK(UcbIndex(u.estimate(5, a).mean, u.estimate(5, a).count, 61, 100.0) ==
          std::numeric_limits<double>::infinity());
  }
  std::int64_t total = 0;
  for (int s = 0; s < 10; ++s) {
    for (int a = 0; a < 3; ++a) total += u.estimate(s, a).count;
  }
  CHECK(total == 60);
}

TEST_CASE("state tables are isolated") {
  QLearner q(QParams{0.95, std::nullopt, HeuristicFlags{false, true, 0.01}});
  GameView view;
  view.n_actions = 3;
  q.Init(view, 9);
  CHECK(q.current_state() == 9);
  q.SelectAction({1, 3});
  q.Observe({2, 1.0, 1, {}});
  CHECK(q.current_state() == 7);
  const auto row9 = std::vector<double>(q.q_table().Row(9).begin(), q.q_table().Row(9).end());
  q.SelectAction({2, 3});
  q.Observe({0, -3.0, 0, {}});
  const auto after = q.q_table().Row(9);
  CHECK(std::equal(after.begin(), after.end(), row9.begin()));
  for (int s = 0; s < 10; ++s) {
    if (s == 7 || s == 9) continue;
    for (int a = 0; a < 3; ++a) CHECK(q.q_table()(s, a) == 0.0);
  }
}

TEST_CASE("exp3 weights and probabilities") {
  Exp3Player e;
  GameView view;
  view.n_actions = 2;
  e.Init(view, 0);
  const auto p = e.probabilities();
  CHECK(p[0] == 0.5);
  const int a = e.SelectAction({1, 2});
  e.Observe({a, 9.0, std::nullopt, {}});
  CHECK(std::abs(e.weights()[a] - std::exp(0.001)) < 1e-12);
  CHECK(e.weights()[1 - a] == 1.0);
}

TEST_CASE("exp3 stays finite over long runs") {
  Exp3Player e(Exp3Params{0.5});
  GameView view;
  view.n_actions = 3;
  e.Init(view, 0);
  for (int t = 1; t <= 200000; ++t) {
    const int a = e.SelectAction({t, 3});
    e.Observe({a, a == 0 ? 9.0 : -9.0, std::nullopt, {}});
  }
  double sum = 0;
  for (double p : e.probabilities()) {
    CHECK(std::isfinite(p));
    CHECK(p >= 0.5 / 3 - 1e-12);
    sum += p;
  }
  CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("m3 optimistic start and fallback probability") {
  const MatrixGame g(PayoffMatrix{{9, -9}, {-9, 9}}, PayoffMatrix{{-9, 9}, {9, -9}});
  M3Player m;
  m.Init(FullGameView(g, Role::kRow), 0);
  for (double v : m.q_table().values()) CHECK(std::abs(v - 180.0) < 1e-9);
  CHECK(m.q_table().n_states() == 5);
  CHECK(std::abs(m.security().value) < 1e-9);
  m.SelectAction({1, 2});
  CHECK(m.last_fallback_probability() == 0.0);
  m.Observe({0, -9.0, 0, {}});
  m.SelectAction({2, 2});
  CHECK(std::abs(m.last_fallback_probability() - 0.09) < 1e-12);
  m.Observe({0, -1.0, 1, {}});
  m.SelectAction({3, 2});
  CHECK(std::abs(m.last_fallback_probability() - 0.1) < 1e-12);
  CHECK(m.cumulative_reward() == -10.0);
}

TEST_CASE("m3 q update follows the joint-action state") {
  const MatrixGame g(PayoffMatrix{{1, 2}, {3, 4}}, PayoffMatrix(2));
  M3Player m;
  m.Init(FullGameView(g, Role::kRow), 0);
  m.SelectAction({1, 2});
  m.Observe({1, 3.0, 0, {}});
  // From the initial state 4: 180 + 0.1 * (3 + 0.95 * 180 - 180).
  CHECK(std::abs(m.q_table()(4, 1) - (180 + 0.1 * (3 + 0.95 * 180 - 180))) < 1e-9);
  CHECK(std::abs(m.q_table()(2, 0) - 180.0) < 1e-9);
}

TEST_CASE("information hygiene") {
  Rng rng(61);
  for (const PlayerSpec& spec : AllBaseSpecs()) {
    CAPTURE(ToString(spec));
    for (int trial = 0; trial < 10; ++trial) {
      const MatrixGame g = testing::RandomGame(rng, 3);
      auto a = MakePlayer(spec);
      auto b = MakePlayer(spec);
      const InformationNeeds n = a->needs();
      Perturbation pert{!n.needs_matrix, !n.needs_opponent_action,
                        !n.needs_counterfactuals};
      const auto base = Drive(*a, g, 300, trial, trial + 100);
      const auto noisy = Drive(*b, g, 300, trial, trial + 100, pert);
      CHECK(base == noisy);
    }
  }
}

TEST_CASE("players are deterministic given seed and observations") {
  Rng rng(71);
  for (const PlayerSpec& spec : AllBaseSpecs()) {
    CAPTURE(ToString(spec));
    const MatrixGame g = testing::RandomGame(rng, 3);
    auto a = MakePlayer(spec);
    auto b = MakePlayer(spec);
    CHECK(Drive(*a, g, 500, 5, 6) == Drive(*b, g, 500, 5, 6));
    CHECK(a->StateSnapshot() == b->StateSnapshot());
    // Re-initialising resets everything.
    const auto again = Drive(*a, g, 500, 5, 6);
    CHECK(again == Drive(*b, g, 500, 5, 6));
  }
}

TEST_CASE("players only emit legal actions") {
  Rng rng(81);
  for (const PlayerSpec& spec : AllBaseSpecs()) {
    for (int k : {2, 4}) {
      auto p = MakePlayer(spec);
      for (int a : Drive(*p, testing::RandomGame(rng, k), 200, 1, 2)) {
        CHECK(a >= 0);
        CHECK(a < k);
      }
    }
  }
}

}  // namespace
}  // namespace rmg

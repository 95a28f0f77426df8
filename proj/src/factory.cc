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

#include "rmg/factory.h"

#include "rmg/hedge.h"

namespace rmg {
namespace {

double Param(const PlayerSpec& spec, const char* key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

HeuristicFlags Flags(const PlayerSpec& spec) {
  HeuristicFlags flags;
  flags.window = spec.window;
  flags.state = spec.state;
  flags.window_rate = Param(spec, "alpha_w", flags.window_rate);
  return flags;
}

std::unique_ptr<Player> Build(const PlayerSpec& spec) {
  if (spec.is_hedge()) {
    std::vector<std::unique_ptr<Player>> experts;
    for (const PlayerSpec& e : spec.experts()) experts.push_back(Build(e));
    return std::make_unique<HedgePlayer>(Build(spec.top()), std::move(experts));
  }
  switch (spec.algorithm) {
    case Algorithm::kR:
      return std::make_unique<RandomPlayer>();
    case Algorithm::kG:
      return std::make_unique<GreedyPlayer>();
    case Algorithm::kB:
      return std::make_unique<BullyPlayer>();
    case Algorithm::kMinMax:
      return std::make_unique<MinMaxPlayer>();
    case Algorithm::kF:
      return std::make_unique<FictitiousPlayer>();
    case Algorithm::kJ:
      return std::make_unique<CumulativeReturnPlayer>(Flags(spec));
    case Algorithm::kQ: {
      QParams p;
      p.gamma = Param(spec, "gamma", p.gamma);
      if (auto it = spec.params.find("alpha"); it != spec.params.end()) {
        p.alpha = it->second;
      }
      p.heuristics = Flags(spec);
      return std::make_unique<QLearner>(p);
    }
    case Algorithm::kS: {
      SatisficingParams p;
      p.initial_aspiration = Param(spec, "alpha", p.initial_aspiration);
      p.lambda = Param(spec, "lambda", p.lambda);
      return std::make_unique<SatisficingPlayer>(p);
    }
    case Algorithm::kU: {
      UcbParams p;
      p.c = Param(spec, "C", p.c);
      p.heuristics = Flags(spec);
      return std::make_unique<UcbPlayer>(p);
    }
    case Algorithm::kExp3: {
      Exp3Params p;
      p.gamma = Param(spec, "gamma", p.gamma);
      return std::make_unique<Exp3Player>(p);
    }
    case Algorithm::kM3: {
      M3Params p;
      p.gamma = Param(spec, "gamma", p.gamma);
      p.alpha = Param(spec, "alpha", p.alpha);
      p.lambda = Param(spec, "lambda", p.lambda);
      return std::make_unique<M3Player>(p);
    }
  }
  return nullptr;
}

}  // namespace

std::unique_ptr<Player> MakePlayer(const PlayerSpec& spec) {
  ValidateSpec(spec);
  return Build(spec);
}

}  // namespace rmg

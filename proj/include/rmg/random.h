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

#ifndef RMG_RANDOM_H_
#define RMG_RANDOM_H_

#include <cstdint>
#include <random>
#include <string>

namespace rmg {

// Mixes any number of 64-bit words into one seed (SplitMix64 finalizer chain).
// Used for every derived seed: per-match, per-player, per-expert.
std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b);

template <typename... Rest>
std::uint64_t DeriveSeed(std::uint64_t base, Rest... rest) {
  std::uint64_t h = base;
  ((h = MixSeed(h, static_cast<std::uint64_t>(rest))), ...);
  return h;
}

// Seeded generator with platform-independent draws. The std distributions
// are implementation-defined, so the mappings from raw words are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  void Seed(std::uint64_t seed) { engine_.seed(seed); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

  // Uniform on {0, ..., n-1}; n must be positive.
  int UniformInt(int n);

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Full engine state as text, for state snapshots.
  std::string State() const;

 private:
  std::mt19937_64 engine_;
};

}  // namespace rmg

#endif  // RMG_RANDOM_H_

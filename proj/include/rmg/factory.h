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

#ifndef RMG_FACTORY_H_
#define RMG_FACTORY_H_

#include <memory>

#include "rmg/player_spec.h"
#include "rmg/players.h"

namespace rmg {

// Builds a fresh, uninitialised player tree. Validates the spec first.
std::unique_ptr<Player> MakePlayer(const PlayerSpec& spec);

}  // namespace rmg

#endif  // RMG_FACTORY_H_

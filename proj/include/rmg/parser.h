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

#ifndef RMG_PARSER_H_
#define RMG_PARSER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rmg/errors.h"
#include "rmg/player_spec.h"

namespace rmg {

class ParseError : public ConfigError {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct PlayerAlias {
  std::string_view name;
  std::string_view expansion;
};

// HSUGS, HSUM, HHUMM, HHHUMM, HHUMMM, HSSS.
std::span<const PlayerAlias> PlayerAliases();

// Grammar (whitespace between tokens is ignored, names are case-sensitive):
//   expr ::= base | alias | "hedge" "(" expr ("," expr)+ ")"
//   base ::= name ["+w"] ["+s"] ["{" key "=" number ("," key "=" number)* "}"]
// The first hedge argument is the top. The result is validated.
PlayerSpec ParsePlayerExpr(std::string_view text);

}  // namespace rmg

#endif  // RMG_PARSER_H_

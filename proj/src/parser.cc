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

#include "rmg/parser.h"

#include <array>
#include <cctype>
#include <charconv>

namespace rmg {
namespace {

constexpr std::array<PlayerAlias, 6> kAliases = {{
    {"HSUGS", "hedge(S,U,G,S)"},
    {"HSUM", "hedge(S,U,M3)"},
    {"HHUMM", "hedge(S,hedge(S,U,M3),M3)"},
    {"HHHUMM", "hedge(S,hedge(S,hedge(S,U,M3),M3),M3)"},
    {"HHUMMM", "hedge(S,hedge(S,U,M3),M3,M3)"},
    {"HSSS", "hedge(S,S,S)"},
}};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PlayerSpec ParseAll() {
    PlayerSpec spec = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(pos_, message);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void Expect(char c) {
    if (!Peek(c)) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view Identifier() {
    SkipSpace();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) Fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  double Number() {
    SkipSpace();
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) Fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  PlayerSpec ParseExpr() {
    SkipSpace();
    const std::size_t start = pos_;
    const std::string_view name = Identifier();
    if (name == "hedge") return ParseHedge(start);
    for (const PlayerAlias& alias : kAliases) {
      if (alias.name == name) return Parser(alias.expansion).ParseAll();
    }
    const std::optional<Algorithm> algorithm = AlgorithmFromName(name);
    if (!algorithm) {
      pos_ = start;
      Fail("unknown player name '" + std::string(name) + "'");
    }
    PlayerSpec spec = PlayerSpec::Base(*algorithm);
    ParseModifier('w', spec.window);
    ParseModifier('s', spec.state);
    if ((spec.window || spec.state) && !SupportsHeuristics(*algorithm)) {
      pos_ = start;
      Fail("heuristics +w/+s are only supported on U, Q and J");
    }
    if (Peek('{')) ParseParams(spec);
    Validate(spec, start);
    return spec;
  }

  void ParseModifier(char letter, bool& flag) {
    const std::size_t save = pos_;
    if (!Peek('+')) return;
    ++pos_;
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == letter) {
      ++pos_;
      flag = true;
    } else {
      pos_ = save;
    }
  }

  void ParseParams(PlayerSpec& spec) {
    Expect('{');
    do {
      const std::size_t key_pos = (SkipSpace(), pos_);
      std::string key(Identifier());
      Expect('=');
      const double value = Number();
      if (!spec.params.emplace(key, value).second) {
        pos_ = key_pos;
        Fail("duplicate parameter '" + key + "'");
      }
    } while (Peek(',') && (++pos_, true));
    Expect('}');
  }

  PlayerSpec ParseHedge(std::size_t start) {
    Expect('(');
    PlayerSpec top = ParseExpr();
    std::vector<PlayerSpec> experts;
    while (Peek(',')) {
      ++pos_;
      experts.push_back(ParseExpr());
    }
    Expect(')');
    if (experts.empty()) {
      pos_ = start;
      Fail("hedge needs a top and at least two experts");
    }
    PlayerSpec spec = PlayerSpec::Hedge(std::move(top), std::move(experts));
    Validate(spec, start);
    return spec;
  }

  void Validate(const PlayerSpec& spec, std::size_t start) {
    try {
      ValidateSpec(spec);
    } catch (const ConfigError& e) {
      pos_ = start;
      Fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : ConfigError("at position " + std::to_string(position) + ": " + message),
      position_(position) {}

std::span<const PlayerAlias> PlayerAliases() { return kAliases; }

PlayerSpec ParsePlayerExpr(std::string_view text) {
  return Parser(text).ParseAll();
}

}  // namespace rmg

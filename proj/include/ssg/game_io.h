// Copyright 2026 The ssg Authors
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

#ifndef SSG_GAME_IO_H
#define SSG_GAME_IO_H

#include <string>
#include <string_view>

#include "ssg/games.h"

namespace ssg {

// Line-oriented text formats. '#' starts a comment and blank lines are
// ignored everywhere.
//
// Game file:
//   ssg-game v1
//   name: <string>
//   alice: <nA>
//   bob: <nB>
//   prior:
//   <nA lines of nB rationals, "p/q" or integer>
//   win:
//   <nA lines of nB tokens from {0, 1, 01, -}>
//
// Strategy file:
//   ssg-strategy v1
//   game: <name>                  (informational)
//   class: <cr|ci|qr|qi>          (optional; inferred when absent)
//   <alice|bob> <index>: <gate>
// where <gate> is I, X, E0, E1, "U <angle> <nx> <ny> <nz>", or "KRAUS <k>"
// followed by k lines of 8 floats (row-major re/im pairs).

/// Throws ParseError (with line number) or ValidationError.
GameSpec parse_game(std::string_view text);
std::string serialize_game(const GameSpec &game);

/// Throws ParseError, ShapeMismatch when the gate count does not match the
/// game, or ValidationError when a gate is outside the declared class.
Strategy parse_strategy(std::string_view text, const GameSpec &game);
std::string serialize_strategy(const Strategy &s, std::string_view game_name);

/// Full-precision round-trippable rendering of a double.
std::string format_double_exact(double v);

}  // namespace ssg

#endif

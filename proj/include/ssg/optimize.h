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

#ifndef SSG_OPTIMIZE_H
#define SSG_OPTIMIZE_H

#include <cstdint>
#include <optional>
#include <vector>

#include "ssg/games.h"
#include "ssg/search.h"

namespace ssg {

struct SearchResult {
    /// Equals win_rate(game, strategy).
    double best_rate;
    /// Set by the exhaustive classical searches.
    std::optional<Rational> exact_rate;
    Strategy strategy;
    std::uint64_t evaluations;
    /// Final value of every restart, in restart order. Empty for exhaustive
    /// searches.
    std::vector<double> per_restart_rates;
};

inline constexpr double MAX_EXHAUSTIVE_ASSIGNMENTS = 1e8;

/// Enumerates every assignment of {I, X} (or {I, X, E0, E1} when
/// irreversible) to both players and returns the exact optimum. Ties go to
/// the lexicographically first assignment, Alice's inputs first, with
/// I < X < E0 < E1. Throws SearchSpaceTooLarge beyond 1e8 assignments.
SearchResult exhaustive_classical(const GameSpec &game, bool irreversible);

/// Multi-start compass ascent over an axis-angle rotation vector per gate.
/// Deterministic in (game, cfg.seed) regardless of thread count.
SearchResult optimize_unitary(const GameSpec &game, const OptimConfig &cfg);

/// Multi-start compass ascent over channel_from_params parameters per gate.
/// The best exhaustive classical (ir)reversible strategy and the best
/// optimize_unitary strategy are refined as two extra warm starts ahead of
/// the cfg.restarts random ones, so the result never falls below either.
SearchResult optimize_channel(const GameSpec &game, const OptimConfig &cfg);

/// Runs the search matching a gate class: exhaustive for cr/ci, continuous
/// for qr/qi.
SearchResult optimize_for_class(const GameSpec &game, GateClass c, const OptimConfig &cfg);

}  // namespace ssg

#endif

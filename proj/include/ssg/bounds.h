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

#ifndef SSG_BOUNDS_H
#define SSG_BOUNDS_H

#include <optional>
#include <span>
#include <vector>

#include "ssg/games.h"
#include "ssg/search.h"

namespace ssg {

/// Optimal success probability for telling rho (prior p) from sigma (prior q):
/// 1/2 + ||p rho - q sigma||_1 / 2. Throws BadPriors unless p, q >= 0 and
/// p + q = 1 within 1e-12.
double helstrom_bound(const DensityMatrix &rho, const DensityMatrix &sigma, double p, double q);

/// Alice's prepared states (one Bloch vector per input) for a game.
struct DiscriminationInstance {
    GameSpec game;
    std::vector<BlochVector> vectors;
};

struct BoundResult {
    double upper_bound = 0;
    /// Contribution of each Bob input; sums to upper_bound.
    std::vector<double> per_b_terms;
    /// Set for games with the 32-Game structure (uniform or biased prior).
    std::optional<int> dmax;
    std::vector<BlochVector> argmax_vectors;
};

/// Upper bound on any strategy whose Alice prepares these states: for each b,
/// Bob's best measurement wins Sum_a p W^{(0)} + lambda_+(Delta_b) with
/// Delta_b = Sum_a p (W^{(1)} - W^{(0)}) rho_a and lambda_+ the sum of the
/// positive eigenvalues. Throws ShapeMismatch or OutsideBlochBall.
BoundResult discrimination_bound(const DiscriminationInstance &inst);

enum class Bound32Variant { Uniform, Biased };

/// Uniform (game32) or biased (b32) prior when the game has the 32-Game
/// structure.
std::optional<Bound32Variant> detect_bound32_variant(const GameSpec &game);

/// r_i = v_i - k (v_{i+1} + v_{i+2}) with indices mod 3; k = 1 uniform, 2 biased.
std::array<BlochVector, 3> difference_vectors(std::span<const BlochVector, 3> v, Bound32Variant variant);

/// Closed form for the two 32-Games:
///   uniform: 1/2 + (1/18) Sum_i max(1, |r_i|)
///   biased:  1/2 + (1/30) Sum_i max(3, |r_i|)
/// Throws OutsideBlochBall.
BoundResult bound_32_form(std::span<const BlochVector, 3> v, Bound32Variant variant);

/// Number of indices whose trace-norm term sits on the flat branch
/// (|r_i| < threshold - 1e-9, threshold 1 uniform or 3 biased).
int dmax_classify(std::span<const BlochVector, 3> v, Bound32Variant variant);

/// Seeded multi-start compass ascent of discrimination_bound over Alice's
/// Bloch vectors, each kept inside the unit ball by radial projection.
BoundResult maximize_discrimination_bound(const GameSpec &game, const OptimConfig &cfg);

/// v0.v1 + v1.v2 + v0.v2 for three unit vectors summing to zero; always -3/2.
/// Throws PreconditionViolated when the vectors are not unit or do not sum
/// to zero within 1e-9.
double gram_identity_check(std::span<const BlochVector, 3> v);

}  // namespace ssg

#endif

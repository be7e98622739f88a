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

#ifndef SSG_GATES_H
#define SSG_GATES_H

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "ssg/qubit.h"

namespace ssg {

/// Tolerance used for CPTP checks and for matching numerical gates against
/// the canonical classical gates.
inline constexpr double GATE_TOLERANCE = 1e-9;

/// Number of real parameters describing one general channel.
inline constexpr size_t CHANNEL_PARAM_COUNT = 16;

enum class GateClass {
    ClassicalReversible,
    ClassicalIrreversible,
    QuantumReversible,
    QuantumIrreversible,
};

/// "cr", "ci", "qr" or "qi".
std::string_view gate_class_short_name(GateClass c);
std::string_view gate_class_long_name(GateClass c);
std::optional<GateClass> parse_gate_class(std::string_view text);
/// True when every gate of `inner` also belongs to `outer`.
bool class_contains(GateClass outer, GateClass inner);

struct IdentityGate {
    bool operator==(const IdentityGate &) const = default;
};
struct BitFlipGate {
    bool operator==(const BitFlipGate &) const = default;
};
struct EraseGate {
    int target;
    bool operator==(const EraseGate &) const = default;
};
/// cos(angle/2) I - i sin(angle/2) (axis . sigma). Global phase is dropped.
struct UnitaryGate {
    BlochVector axis;
    double angle;
    bool operator==(const UnitaryGate &) const = default;
};
struct ChannelGate {
    std::vector<Mat2> kraus;
    bool operator==(const ChannelGate &) const = default;
};

/// One conditional operation applied by a player. Immutable; the Kraus
/// realization is computed once at construction.
class Gate {
   public:
    using Variant = std::variant<IdentityGate, BitFlipGate, EraseGate, UnitaryGate, ChannelGate>;

    static Gate identity();
    static Gate bit_flip();
    /// Throws InvalidGate unless target is 0 or 1.
    static Gate erase_to(int target);
    /// Throws InvalidGate unless |axis| = 1 within GATE_TOLERANCE. The stored
    /// axis is renormalized.
    static Gate unitary(const BlochVector &axis, double angle);
    /// Throws InvalidGate unless 1..4 operators forming a CPTP map.
    static Gate channel(std::vector<Mat2> kraus);

    const Variant &variant() const {
        return variant_;
    }
    const std::vector<Mat2> &kraus() const {
        return kraus_;
    }

    bool operator==(const Gate &other) const {
        return variant_ == other.variant_;
    }

   private:
    Gate(Variant v, std::vector<Mat2> kraus) : variant_(std::move(v)), kraus_(std::move(kraus)) {
    }
    Variant variant_;
    std::vector<Mat2> kraus_;
};

/// The SU(2) element cos(angle/2) I - i sin(angle/2) (axis . sigma).
Mat2 su2_matrix(const BlochVector &axis, double angle);

/// Kraus pair erasing to |target>. Target 1 is X times the target-0 pair.
std::vector<Mat2> erasure_kraus(int target);

/// Unitary rotation about the x axis.
Gate rotation_x(double angle);

/// Sum_k K rho K^dagger.
DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &g);

/// Unchecked Schrodinger-picture action on an arbitrary matrix.
Mat2 apply_kraus(const Mat2 &rho, std::span<const Mat2> kraus);
/// Heisenberg-picture action: Sum_k K^dagger E K.
Mat2 apply_kraus_adjoint(const Mat2 &effect, std::span<const Mat2> kraus);

bool is_cptp(std::span<const Mat2> kraus);

/// Unnormalized Choi-style matrix Sum_k vec(K) vec(K)^dagger with row-major
/// vec. Two Kraus lists realize the same channel iff these agree.
using ChoiMatrix = std::array<Complex, 16>;
ChoiMatrix choi_matrix(std::span<const Mat2> kraus);
double choi_distance(const ChoiMatrix &a, const ChoiMatrix &b);

enum class ClassicalAction { Keep, Flip, Erase0, Erase1 };

/// The classical behaviour of g when it equals (as a channel) one of I, X,
/// erase-to-0, erase-to-1.
std::optional<ClassicalAction> classical_action(const Gate &g);
Gate gate_from_classical(ClassicalAction action);
/// Output bit of the action on an input bit.
int apply_classical(ClassicalAction action, int bit);

/// The unitary realizing g, when g is reversible.
std::optional<Mat2> unitary_matrix(const Gate &g);

/// Axis-angle gate equal to u up to global phase, with angle in [0, pi].
/// Throws InvalidGate when u is not unitary.
Gate unitary_from_matrix(const Mat2 &u);

/// The gate applying `first` and then `second`. Classical pairs stay
/// classical, unitary pairs stay unitary, anything else becomes a channel.
Gate compose(const Gate &first, const Gate &second);

bool gate_in_class(const Gate &g, GateClass c);

/// Builds a channel from 16 unconstrained reals.
///
/// The parameters fill a lower-triangular 4x4 factor L (real diagonal). Column
/// k of L, read row-major as a 2x2 matrix, is an unnormalized Kraus operator.
/// Stacking the four operators gives two 8-dimensional columns (one per input
/// basis state) which are Gram-Schmidt orthonormalized into a Stinespring
/// isometry; its 2x2 blocks are the returned Kraus operators. Degenerate
/// columns fall back to a fixed orthonormal completion, so every input is
/// valid.
///
/// Layout: L00 L11 L22 L33, then (re, im) of L10 L20 L21 L30 L31 L32.
Gate channel_from_params(std::span<const double, CHANNEL_PARAM_COUNT> params);

/// The four Kraus operators built by channel_from_params, unvalidated and
/// including zero operators. Used by inner optimization loops.
std::array<Mat2, 4> kraus_from_params(std::span<const double, CHANNEL_PARAM_COUNT> params);

/// Parameters reproducing the given channel under channel_from_params
/// (semidefinite Cholesky factor of the Choi matrix).
std::array<double, CHANNEL_PARAM_COUNT> params_from_kraus(std::span<const Mat2> kraus);

}  // namespace ssg

#endif

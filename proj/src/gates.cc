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

#include "ssg/gates.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ssg/errors.h"

namespace ssg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

Mat2 sum_kraus_dagger_kraus(std::span<const Mat2> kraus) {
    Mat2 total = Mat2::zero();
    for (const auto &k : kraus) {
        total = total + dagger(k) * k;
    }
    return total;
}

const ChoiMatrix &canonical_choi(ClassicalAction action) {
    static const std::array<ChoiMatrix, 4> table = [] {
        std::array<ChoiMatrix, 4> t;
        auto one = [](const Mat2 &m) {
            return std::vector<Mat2>{m};
        };
        t[0] = choi_matrix(one(Mat2::identity()));
        t[1] = choi_matrix(one(pauli(Pauli::X)));
        t[2] = choi_matrix(erasure_kraus(0));
        t[3] = choi_matrix(erasure_kraus(1));
        return t;
    }();
    return table[static_cast<size_t>(action)];
}

bool choi_is_rank_one(const ChoiMatrix &j) {
    // A trace-preserving Choi matrix has trace 2; rank one iff J^2 = 2 J.
    double worst = 0;
    for (int p = 0; p < 4; p++) {
        for (int q = 0; q < 4; q++) {
            Complex sq = 0;
            for (int m = 0; m < 4; m++) {
                sq += j[4 * p + m] * j[4 * m + q];
            }
            worst = std::max(worst, std::abs(sq - 2.0 * j[4 * p + q]));
        }
    }
    return worst <= GATE_TOLERANCE;
}

}  // namespace

std::string_view gate_class_short_name(GateClass c) {
    switch (c) {
        case GateClass::ClassicalReversible:
            return "cr";
        case GateClass::ClassicalIrreversible:
            return "ci";
        case GateClass::QuantumReversible:
            return "qr";
        case GateClass::QuantumIrreversible:
            return "qi";
    }
    return "?";
}

std::string_view gate_class_long_name(GateClass c) {
    switch (c) {
        case GateClass::ClassicalReversible:
            return "classical reversible";
        case GateClass::ClassicalIrreversible:
            return "classical (ir)reversible";
        case GateClass::QuantumReversible:
            return "quantum reversible";
        case GateClass::QuantumIrreversible:
            return "quantum (ir)reversible";
    }
    return "?";
}

std::optional<GateClass> parse_gate_class(std::string_view text) {
    for (auto c : {GateClass::ClassicalReversible, GateClass::ClassicalIrreversible, GateClass::QuantumReversible,
                   GateClass::QuantumIrreversible}) {
        if (text == gate_class_short_name(c)) {
            return c;
        }
    }
    return std::nullopt;
}

bool class_contains(GateClass outer, GateClass inner) {
    if (outer == inner || outer == GateClass::QuantumIrreversible) {
        return true;
    }
    return inner == GateClass::ClassicalReversible;
}

Gate Gate::identity() {
    return Gate(IdentityGate{}, {Mat2::identity()});
}

Gate Gate::bit_flip() {
    return Gate(BitFlipGate{}, {pauli(Pauli::X)});
}

Gate Gate::erase_to(int target) {
    if (target != 0 && target != 1) {
        throw InvalidGate("erasure target must be 0 or 1, got " + std::to_string(target));
    }
    return Gate(EraseGate{target}, erasure_kraus(target));
}

Gate Gate::unitary(const BlochVector &axis, double angle) {
    double n = axis.norm();
    if (!std::isfinite(angle) || !(std::abs(n - 1) <= GATE_TOLERANCE)) {
        std::stringstream ss;
        ss << "unitary gate needs a unit axis and finite angle (|axis| = " << n << ")";
        throw InvalidGate(ss.str());
    }
    BlochVector unit = axis * (1 / n);
    return Gate(UnitaryGate{unit, angle}, {su2_matrix(unit, angle)});
}

Gate Gate::channel(std::vector<Mat2> kraus) {
    if (kraus.empty() || kraus.size() > 4) {
        throw InvalidGate("a channel needs between 1 and 4 Kraus operators");
    }
    for (const auto &k : kraus) {
        for (const auto &v : k.e) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw InvalidGate("Kraus operator has a non-finite entry");
            }
        }
    }
    if (!is_cptp(kraus)) {
        throw InvalidGate("Kraus operators are not trace preserving");
    }
    auto copy = kraus;
    return Gate(ChannelGate{std::move(copy)}, std::move(kraus));
}

Mat2 su2_matrix(const BlochVector &axis, double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return Complex(c) * Mat2::identity() - Complex(0, s) * pauli_combination(axis);
}

std::vector<Mat2> erasure_kraus(int target) {
    std::vector<Mat2> ks{Mat2::of(1, 0, 0, 0), Mat2::of(0, 1, 0, 0)};
    if (target == 1) {
        for (auto &k : ks) {
            k = pauli(Pauli::X) * k;
        }
    } else if (target != 0) {
        throw InvalidGate("erasure target must be 0 or 1");
    }
    return ks;
}

Gate rotation_x(double angle) {
    return Gate::unitary({1, 0, 0}, angle);
}

Mat2 apply_kraus(const Mat2 &rho, std::span<const Mat2> kraus) {
    Mat2 out = Mat2::zero();
    for (const auto &k : kraus) {
        out = out + k * rho * dagger(k);
    }
    return out;
}

Mat2 apply_kraus_adjoint(const Mat2 &effect, std::span<const Mat2> kraus) {
    Mat2 out = Mat2::zero();
    for (const auto &k : kraus) {
        out = out + dagger(k) * effect * k;
    }
    return out;
}

DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &g) {
    return DensityMatrix(apply_kraus(rho.matrix(), g.kraus()));
}

bool is_cptp(std::span<const Mat2> kraus) {
    if (kraus.empty() || kraus.size() > 4) {
        return false;
    }
    return max_abs_diff(sum_kraus_dagger_kraus(kraus), Mat2::identity()) <= GATE_TOLERANCE;
}

ChoiMatrix choi_matrix(std::span<const Mat2> kraus) {
    ChoiMatrix j{};
    for (const auto &k : kraus) {
        for (int p = 0; p < 4; p++) {
            for (int q = 0; q < 4; q++) {
                j[4 * p + q] += k.e[p] * std::conj(k.e[q]);
            }
        }
    }
    return j;
}

double choi_distance(const ChoiMatrix &a, const ChoiMatrix &b) {
    double r = 0;
    for (size_t k = 0; k < a.size(); k++) {
        r = std::max(r, std::abs(a[k] - b[k]));
    }
    return r;
}

std::optional<ClassicalAction> classical_action(const Gate &g) {
    auto direct = std::visit(
        Overloaded{
            [](const IdentityGate &) -> std::optional<ClassicalAction> {
                return ClassicalAction::Keep;
            },
            [](const BitFlipGate &) -> std::optional<ClassicalAction> {
                return ClassicalAction::Flip;
            },
            [](const EraseGate &e) -> std::optional<ClassicalAction> {
                return e.target == 0 ? ClassicalAction::Erase0 : ClassicalAction::Erase1;
            },
            [](const auto &) -> std::optional<ClassicalAction> {
                return std::nullopt;
            },
        },
        g.variant());
    if (direct.has_value()) {
        return direct;
    }
    auto choi = choi_matrix(g.kraus());
    for (auto action : {ClassicalAction::Keep, ClassicalAction::Flip, ClassicalAction::Erase0, ClassicalAction::Erase1}) {
        if (choi_distance(choi, canonical_choi(action)) <= GATE_TOLERANCE) {
            return action;
        }
    }
    return std::nullopt;
}

Gate gate_from_classical(ClassicalAction action) {
    switch (action) {
        case ClassicalAction::Keep:
            return Gate::identity();
        case ClassicalAction::Flip:
            return Gate::bit_flip();
        case ClassicalAction::Erase0:
            return Gate::erase_to(0);
        case ClassicalAction::Erase1:
            return Gate::erase_to(1);
    }
    return Gate::identity();
}

int apply_classical(ClassicalAction action, int bit) {
    switch (action) {
        case ClassicalAction::Keep:
            return bit;
        case ClassicalAction::Flip:
            return bit ^ 1;
        case ClassicalAction::Erase0:
            return 0;
        case ClassicalAction::Erase1:
            return 1;
    }
    return bit;
}

std::optional<Mat2> unitary_matrix(const Gate &g) {
    if (std::holds_alternative<EraseGate>(g.variant())) {
        return std::nullopt;
    }
    if (!std::holds_alternative<ChannelGate>(g.variant())) {
        return g.kraus().front();
    }
    auto choi = choi_matrix(g.kraus());
    if (!choi_is_rank_one(choi)) {
        return std::nullopt;
    }
    // All Kraus operators are proportional to one unitary; the largest one
    // carries it.
    const Mat2 *best = &g.kraus().front();
    double best_norm = 0;
    for (const auto &k : g.kraus()) {
        double n = std::real(trace(dagger(k) * k));
        if (n > best_norm) {
            best_norm = n;
            best = &k;
        }
    }
    return Complex(std::sqrt(2 / best_norm)) * *best;
}

Gate unitary_from_matrix(const Mat2 &u) {
    if (max_abs_diff(dagger(u) * u, Mat2::identity()) > GATE_TOLERANCE) {
        throw InvalidGate("matrix is not unitary");
    }
    Mat2 s = Complex(1) / std::sqrt(determinant(u)) * u;
    double c = (s(0, 0) + s(1, 1)).real() / 2;
    BlochVector scaled{
        -(s(0, 1) + s(1, 0)).imag() / 2,
        (s(1, 0) - s(0, 1)).real() / 2,
        (s(1, 1) - s(0, 0)).imag() / 2,
    };
    if (c < 0) {
        c = -c;
        scaled = scaled * -1;
    }
    double sn = scaled.norm();
    if (sn < 1e-15) {
        return Gate::unitary({0, 0, 1}, 0);
    }
    return Gate::unitary(scaled * (1 / sn), 2 * std::atan2(sn, c));
}

Gate compose(const Gate &first, const Gate &second) {
    auto a = classical_action(first);
    auto b = classical_action(second);
    if (a.has_value() && b.has_value()) {
        // The composite of two classical maps is determined by its action on
        // the two basis bits.
        int out0 = apply_classical(*b, apply_classical(*a, 0));
        int out1 = apply_classical(*b, apply_classical(*a, 1));
        if (out0 == out1) {
            return Gate::erase_to(out0);
        }
        return out0 == 0 ? Gate::identity() : Gate::bit_flip();
    }
    auto ua = unitary_matrix(first);
    auto ub = unitary_matrix(second);
    if (ua.has_value() && ub.has_value()) {
        return unitary_from_matrix(*ub * *ua);
    }
    std::vector<Mat2> product;
    for (const auto &kb : second.kraus()) {
        for (const auto &ka : first.kraus()) {
            product.push_back(kb * ka);
        }
    }
    auto params = params_from_kraus(product);
    return channel_from_params(params);
}

bool gate_in_class(const Gate &g, GateClass c) {
    switch (c) {
        case GateClass::QuantumIrreversible:
            return true;
        case GateClass::QuantumReversible:
            return unitary_matrix(g).has_value();
        case GateClass::ClassicalReversible: {
            auto action = classical_action(g);
            return action == ClassicalAction::Keep || action == ClassicalAction::Flip;
        }
        case GateClass::ClassicalIrreversible:
            return classical_action(g).has_value();
    }
    return false;
}

Gate channel_from_params(std::span<const double, CHANNEL_PARAM_COUNT> params) {
    std::vector<Mat2> kraus;
    for (const auto &m : kraus_from_params(params)) {
        if (std::real(trace(dagger(m) * m)) > 1e-28) {
            kraus.push_back(m);
        }
    }
    return Gate::channel(std::move(kraus));
}

std::array<Mat2, 4> kraus_from_params(std::span<const double, CHANNEL_PARAM_COUNT> params) {
    std::array<Complex, 16> lower{};
    auto at = [&](int row, int col) -> Complex & {
        return lower[4 * row + col];
    };
    for (int k = 0; k < 4; k++) {
        at(k, k) = params[k];
    }
    static constexpr std::array<std::pair<int, int>, 6> off_diagonal{{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}};
    for (size_t t = 0; t < off_diagonal.size(); t++) {
        auto [row, col] = off_diagonal[t];
        at(row, col) = Complex(params[4 + 2 * t], params[5 + 2 * t]);
    }

    // Column j of the stacked operator holds K'_k(i, j) at position 2k + i,
    // where K'_k(i, j) = L(2i + j, k).
    std::array<std::array<Complex, 8>, 2> cols{};
    for (int j = 0; j < 2; j++) {
        for (int k = 0; k < 4; k++) {
            for (int i = 0; i < 2; i++) {
                cols[j][2 * k + i] = at(2 * i + j, k);
            }
        }
    }

    auto inner = [](const std::array<Complex, 8> &u, const std::array<Complex, 8> &v) {
        Complex r = 0;
        for (size_t k = 0; k < 8; k++) {
            r += std::conj(u[k]) * v[k];
        }
        return r;
    };
    auto norm = [&](const std::array<Complex, 8> &v) {
        return std::sqrt(std::real(inner(v, v)));
    };
    auto project_out = [&](const std::array<Complex, 8> &unit, std::array<Complex, 8> v) {
        Complex overlap = inner(unit, v);
        for (size_t k = 0; k < 8; k++) {
            v[k] -= overlap * unit[k];
        }
        return v;
    };

    constexpr double degenerate = 1e-12;
    std::array<Complex, 8> q0 = cols[0];
    double n0 = norm(q0);
    if (n0 <= degenerate) {
        q0 = {};
        q0[0] = 1;
    } else {
        for (auto &v : q0) {
            v /= n0;
        }
    }
    std::array<Complex, 8> q1 = project_out(q0, cols[1]);
    double n1 = norm(q1);
    if (n1 <= degenerate * std::max(1.0, norm(cols[1]))) {
        // Fixed completion: the first basis vector with a large component
        // orthogonal to q0. Some component has squared norm >= 7/8.
        for (size_t m = 0; m < 8; m++) {
            std::array<Complex, 8> e{};
            e[m] = 1;
            q1 = project_out(q0, e);
            n1 = norm(q1);
            if (n1 > 0.5) {
                break;
            }
        }
    }
    for (auto &v : q1) {
        v /= n1;
    }

    std::array<Mat2, 4> kraus;
    for (int k = 0; k < 4; k++) {
        kraus[k] = Mat2::of(q0[2 * k], q1[2 * k], q0[2 * k + 1], q1[2 * k + 1]);
    }
    return kraus;
}

std::array<double, CHANNEL_PARAM_COUNT> params_from_kraus(std::span<const Mat2> kraus) {
    ChoiMatrix j = choi_matrix(kraus);
    std::array<Complex, 16> lower{};
    double scale = 0;
    for (int k = 0; k < 4; k++) {
        scale += j[5 * k].real();
    }
    double eps = 1e-12 * std::max(scale, 1.0);
    for (int k = 0; k < 4; k++) {
        double d = j[5 * k].real();
        for (int m = 0; m < k; m++) {
            d -= std::norm(lower[4 * k + m]);
        }
        if (d <= eps) {
            continue;
        }
        double pivot = std::sqrt(d);
        lower[5 * k] = pivot;
        for (int p = k + 1; p < 4; p++) {
            Complex v = j[4 * p + k];
            for (int m = 0; m < k; m++) {
                v -= lower[4 * p + m] * std::conj(lower[4 * k + m]);
            }
            lower[4 * p + k] = v / pivot;
        }
    }

    std::array<double, CHANNEL_PARAM_COUNT> params{};
    for (int k = 0; k < 4; k++) {
        params[k] = lower[5 * k].real();
    }
    static constexpr std::array<std::pair<int, int>, 6> off_diagonal{{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}};
    for (size_t t = 0; t < off_diagonal.size(); t++) {
        auto [row, col] = off_diagonal[t];
        params[4 + 2 * t] = lower[4 * row + col].real();
        params[5 + 2 * t] = lower[4 * row + col].imag();
    }
    return params;
}

}  // namespace ssg

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

#include "ssg/bounds.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ssg/errors.h"

namespace ssg {

namespace {

Mat2 bloch_matrix(const BlochVector &v) {
    return Complex(0.5) * (Mat2::identity() + pauli_combination(v));
}

/// Shared engine behind discrimination_bound and the maximizer. Vectors are
/// assumed validated.
double discrimination_value(const GameSpec &game, std::span<const BlochVector> vectors,
                            std::vector<double> *per_b = nullptr) {
    double total = 0;
    for (int b = 0; b < game.bob_size(); b++) {
        double guess_zero = 0;
        Mat2 delta = Mat2::zero();
        for (int a = 0; a < game.alice_size(); a++) {
            double p = boost::rational_cast<double>(game.prior(a, b));
            guess_zero += p * game.wins(a, b, 0);
            double c = p * (game.wins(a, b, 1) - game.wins(a, b, 0));
            if (c != 0) {
                delta = delta + Complex(c) * bloch_matrix(vectors[a]);
            }
        }
        double term = guess_zero + positive_part_trace(delta);
        if (per_b != nullptr) {
            per_b->push_back(term);
        }
        total += term;
    }
    return total;
}

void check_ball(std::span<const BlochVector> vectors) {
    for (size_t k = 0; k < vectors.size(); k++) {
        if (!(vectors[k].norm() <= 1 + STATE_TOLERANCE)) {
            std::stringstream ss;
            ss << "vector " << k << " has norm " << vectors[k].norm() << " > 1";
            throw OutsideBlochBall(ss.str());
        }
    }
}

double threshold(Bound32Variant variant) {
    return variant == Bound32Variant::Uniform ? 1.0 : 3.0;
}

class BoundObjective final : public AscentObjective {
   public:
    explicit BoundObjective(const GameSpec &game) : game_(game), current_(game.alice_size()) {
    }

    double reset(std::span<const double> x) override {
        load(x, current_);
        return discrimination_value(game_, current_);
    }
    double trial(std::span<const double> x, size_t i) override {
        pending_ = current_;
        size_t k = i / 3;
        pending_[k] = {x[3 * k], x[3 * k + 1], x[3 * k + 2]};
        return discrimination_value(game_, pending_);
    }
    void accept() override {
        current_.swap(pending_);
    }
    void project(std::vector<double> &x, size_t i) const override {
        size_t k = i / 3;
        double n = std::sqrt(x[3 * k] * x[3 * k] + x[3 * k + 1] * x[3 * k + 1] + x[3 * k + 2] * x[3 * k + 2]);
        if (n > 1) {
            for (size_t j = 3 * k; j < 3 * k + 3; j++) {
                x[j] /= n;
            }
        }
    }

   private:
    static void load(std::span<const double> x, std::vector<BlochVector> &out) {
        for (size_t k = 0; k < out.size(); k++) {
            out[k] = {x[3 * k], x[3 * k + 1], x[3 * k + 2]};
        }
    }
    const GameSpec &game_;
    std::vector<BlochVector> current_;
    std::vector<BlochVector> pending_;
};

}  // namespace

double helstrom_bound(const DensityMatrix &rho, const DensityMatrix &sigma, double p, double q) {
    if (!(p >= 0 && q >= 0 && std::abs(p + q - 1) <= 1e-12)) {
        std::stringstream ss;
        ss << "priors " << p << ", " << q << " must be non-negative and sum to 1";
        throw BadPriors(ss.str());
    }
    return 0.5 + trace_norm(Complex(p) * rho.matrix() - Complex(q) * sigma.matrix()) / 2;
}

BoundResult discrimination_bound(const DiscriminationInstance &inst) {
    if (static_cast<int>(inst.vectors.size()) != inst.game.alice_size()) {
        throw ShapeMismatch("expected " + std::to_string(inst.game.alice_size()) + " Bloch vectors, got " +
                            std::to_string(inst.vectors.size()));
    }
    check_ball(inst.vectors);
    BoundResult result;
    result.upper_bound = discrimination_value(inst.game, inst.vectors, &result.per_b_terms);
    result.argmax_vectors = inst.vectors;
    if (auto variant = detect_bound32_variant(inst.game)) {
        result.dmax = dmax_classify(std::span<const BlochVector, 3>(inst.vectors.data(), 3), *variant);
    }
    return result;
}

std::optional<Bound32Variant> detect_bound32_variant(const GameSpec &game) {
    for (auto [name, variant] : {std::pair{"game32", Bound32Variant::Uniform}, std::pair{"b32", Bound32Variant::Biased}}) {
        GameSpec reference = builtin_game(name);
        if (game.alice_size() == reference.alice_size() && game.bob_size() == reference.bob_size() &&
            game.prior_table() == reference.prior_table() && game.win_table() == reference.win_table()) {
            return variant;
        }
    }
    return std::nullopt;
}

std::array<BlochVector, 3> difference_vectors(std::span<const BlochVector, 3> v, Bound32Variant variant) {
    double k = variant == Bound32Variant::Uniform ? 1.0 : 2.0;
    std::array<BlochVector, 3> r;
    for (int i = 0; i < 3; i++) {
        r[i] = v[i] - (v[(i + 1) % 3] + v[(i + 2) % 3]) * k;
    }
    return r;
}

BoundResult bound_32_form(std::span<const BlochVector, 3> v, Bound32Variant variant) {
    check_ball(v);
    auto r = difference_vectors(v, variant);
    double t = threshold(variant);
    double scale = variant == Bound32Variant::Uniform ? 1.0 / 18 : 1.0 / 30;
    BoundResult result;
    result.upper_bound = 0.5;
    for (const auto &ri : r) {
        double term = scale * std::max(t, ri.norm());
        result.per_b_terms.push_back(term);
        result.upper_bound += term;
    }
    result.dmax = dmax_classify(v, variant);
    result.argmax_vectors.assign(v.begin(), v.end());
    return result;
}

int dmax_classify(std::span<const BlochVector, 3> v, Bound32Variant variant) {
    double t = threshold(variant);
    int count = 0;
    for (const auto &ri : difference_vectors(v, variant)) {
        if (ri.norm() < t - 1e-9) {
            count++;
        }
    }
    return count;
}

BoundResult maximize_discrimination_bound(const GameSpec &game, const OptimConfig &cfg) {
    cfg.validate();
    size_t dim = 3 * static_cast<size_t>(game.alice_size());
    std::vector<AscentResult> outcomes(cfg.restarts);
    parallel_for(outcomes.size(), resolve_threads(cfg.threads), [&](size_t k) {
        std::mt19937_64 rng(restart_seed(cfg.seed, k));
        std::normal_distribution<double> normal(0, 1);
        std::vector<double> start(dim);
        for (size_t j = 0; j < dim; j += 3) {
            BlochVector v{normal(rng), normal(rng), normal(rng)};
            double n = v.norm();
            v = n > 0 ? v * (1 / n) : BlochVector{0, 0, 1};
            start[j] = v.x;
            start[j + 1] = v.y;
            start[j + 2] = v.z;
        }
        BoundObjective objective(game);
        outcomes[k] = compass_ascent(std::move(start), objective, cfg);
    });
    size_t best = 0;
    for (size_t k = 1; k < outcomes.size(); k++) {
        if (outcomes[k].value > outcomes[best].value ||
            (outcomes[k].value == outcomes[best].value && outcomes[k].x < outcomes[best].x)) {
            best = k;
        }
    }
    std::vector<BlochVector> vectors;
    for (size_t j = 0; j < dim; j += 3) {
        const auto &x = outcomes[best].x;
        vectors.push_back({x[j], x[j + 1], x[j + 2]});
    }
    return discrimination_bound({game, std::move(vectors)});
}

double gram_identity_check(std::span<const BlochVector, 3> v) {
    for (const auto &u : v) {
        if (std::abs(u.norm() - 1) > 1e-9) {
            throw PreconditionViolated("gram identity needs unit vectors");
        }
    }
    if ((v[0] + v[1] + v[2]).norm() > 1e-9) {
        throw PreconditionViolated("gram identity needs vectors summing to zero");
    }
    return v[0].dot(v[1]) + v[1].dot(v[2]) + v[0].dot(v[2]);
}

}  // namespace ssg

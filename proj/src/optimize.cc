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

#include "ssg/optimize.h"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "ssg/errors.h"
#include "ssg/game_io.h"

namespace ssg {

namespace {

struct Effect {
    double scalar = 0;
    BlochVector vec;
};

BlochVector state_bloch(const Mat2 &rho) {
    return {2 * rho(0, 1).real(), -2 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

Effect effect_components(const Mat2 &e) {
    return {trace(e).real() / 2, {e(0, 1).real(), -e(0, 1).imag(), (e(0, 0) - e(1, 1)).real() / 2}};
}

const Mat2 &ket0_matrix() {
    static const Mat2 m = Mat2::diag(1, 0);
    return m;
}

const Mat2 &ket1_matrix() {
    static const Mat2 m = Mat2::diag(0, 1);
    return m;
}

/// Win rate as a function of per-gate parameter blocks. Alice's gates are
/// summarized by the Bloch vector they prepare from |0>, Bob's by the
/// Heisenberg-picture effect of outcome 1, so q(a, b) = e0_b + s_a . e_b.
class GameObjective : public AscentObjective {
   public:
    GameObjective(const GameSpec &game, size_t block_size)
        : block_size_(block_size),
          alice_size_(game.alice_size()),
          bob_size_(game.bob_size()),
          states_(game.alice_size()),
          effects_(game.bob_size()) {
        base_ = 0;
        for (int a = 0; a < alice_size_; a++) {
            for (int b = 0; b < bob_size_; b++) {
                double p = boost::rational_cast<double>(game.prior(a, b));
                base_ += p * game.wins(a, b, 0);
                coefficient_.push_back(p * (game.wins(a, b, 1) - game.wins(a, b, 0)));
            }
        }
    }

    size_t dimension() const {
        return block_size_ * (alice_size_ + bob_size_);
    }

    double reset(std::span<const double> x) override {
        for (int a = 0; a < alice_size_; a++) {
            states_[a] = alice_state(x.subspan(a * block_size_, block_size_));
        }
        for (int b = 0; b < bob_size_; b++) {
            effects_[b] = bob_effect(x.subspan((alice_size_ + b) * block_size_, block_size_));
        }
        return value();
    }

    double trial(std::span<const double> x, size_t i) override {
        pending_block_ = i / block_size_;
        auto params = x.subspan(pending_block_ * block_size_, block_size_);
        if (pending_block_ < static_cast<size_t>(alice_size_)) {
            pending_state_ = alice_state(params);
            std::swap(states_[pending_block_], pending_state_);
            double v = value();
            std::swap(states_[pending_block_], pending_state_);
            return v;
        }
        size_t b = pending_block_ - alice_size_;
        pending_effect_ = bob_effect(params);
        std::swap(effects_[b], pending_effect_);
        double v = value();
        std::swap(effects_[b], pending_effect_);
        return v;
    }

    void accept() override {
        if (pending_block_ < static_cast<size_t>(alice_size_)) {
            states_[pending_block_] = pending_state_;
        } else {
            effects_[pending_block_ - alice_size_] = pending_effect_;
        }
    }

   protected:
    virtual BlochVector alice_state(std::span<const double> params) const = 0;
    virtual Effect bob_effect(std::span<const double> params) const = 0;

   private:
    double value() const {
        double total = base_;
        size_t k = 0;
        for (int a = 0; a < alice_size_; a++) {
            for (int b = 0; b < bob_size_; b++, k++) {
                total += coefficient_[k] * (effects_[b].scalar + states_[a].dot(effects_[b].vec));
            }
        }
        return total;
    }

    size_t block_size_;
    int alice_size_;
    int bob_size_;
    double base_;
    std::vector<double> coefficient_;
    std::vector<BlochVector> states_;
    std::vector<Effect> effects_;
    size_t pending_block_ = 0;
    BlochVector pending_state_;
    Effect pending_effect_;
};

Mat2 rotation_vector_matrix(std::span<const double> w) {
    BlochVector v{w[0], w[1], w[2]};
    double angle = v.norm();
    if (angle == 0) {
        return Mat2::identity();
    }
    return su2_matrix(v * (1 / angle), angle);
}

Gate rotation_vector_gate(std::span<const double> w) {
    BlochVector v{w[0], w[1], w[2]};
    double angle = v.norm();
    if (angle == 0) {
        return Gate::unitary({0, 0, 1}, 0);
    }
    return Gate::unitary(v * (1 / angle), angle);
}

class UnitaryObjective final : public GameObjective {
   public:
    explicit UnitaryObjective(const GameSpec &game) : GameObjective(game, 3) {
    }

   protected:
    BlochVector alice_state(std::span<const double> params) const override {
        std::array<Mat2, 1> k{rotation_vector_matrix(params)};
        return state_bloch(apply_kraus(ket0_matrix(), k));
    }
    Effect bob_effect(std::span<const double> params) const override {
        std::array<Mat2, 1> k{rotation_vector_matrix(params)};
        return effect_components(apply_kraus_adjoint(ket1_matrix(), k));
    }
};

class ChannelObjective final : public GameObjective {
   public:
    explicit ChannelObjective(const GameSpec &game) : GameObjective(game, CHANNEL_PARAM_COUNT) {
    }

   protected:
    BlochVector alice_state(std::span<const double> params) const override {
        auto k = kraus_from_params(params.first<CHANNEL_PARAM_COUNT>());
        return state_bloch(apply_kraus(ket0_matrix(), k));
    }
    Effect bob_effect(std::span<const double> params) const override {
        auto k = kraus_from_params(params.first<CHANNEL_PARAM_COUNT>());
        return effect_components(apply_kraus_adjoint(ket1_matrix(), k));
    }
};

struct RestartOutcome {
    AscentResult ascent;
    std::string tie_key;
};

/// Deterministic reduction: highest value, then smallest serialization.
size_t pick_best(const std::vector<RestartOutcome> &outcomes) {
    size_t best = 0;
    for (size_t k = 1; k < outcomes.size(); k++) {
        const auto &c = outcomes[k].ascent.value;
        const auto &b = outcomes[best].ascent.value;
        if (c > b || (c == b && outcomes[k].tie_key < outcomes[best].tie_key)) {
            best = k;
        }
    }
    return best;
}

using GateBuilder = Gate (*)(std::span<const double>);

Gate channel_gate_from_block(std::span<const double> params) {
    return channel_from_params(params.first<CHANNEL_PARAM_COUNT>());
}

Strategy strategy_from_params(const GameSpec &game, std::span<const double> x, size_t block, GateBuilder build,
                              GateClass cls) {
    std::vector<Gate> alice;
    std::vector<Gate> bob;
    for (int a = 0; a < game.alice_size(); a++) {
        alice.push_back(build(x.subspan(a * block, block)));
    }
    for (int b = 0; b < game.bob_size(); b++) {
        bob.push_back(build(x.subspan((game.alice_size() + b) * block, block)));
    }
    return Strategy(std::move(alice), std::move(bob), cls);
}

template <class Objective, class Init>
SearchResult multi_start(const GameSpec &game, const OptimConfig &cfg, std::vector<std::vector<double>> warm_starts,
                         size_t block, GateBuilder build, GateClass cls, Init init) {
    cfg.validate();
    size_t total = warm_starts.size() + cfg.restarts;
    std::vector<RestartOutcome> outcomes(total);
    parallel_for(total, resolve_threads(cfg.threads), [&](size_t k) {
        Objective objective(game);
        std::vector<double> start;
        if (k < warm_starts.size()) {
            start = warm_starts[k];
        } else {
            std::mt19937_64 rng(restart_seed(cfg.seed, k - warm_starts.size()));
            start.resize(objective.dimension());
            init(rng, start);
        }
        outcomes[k].ascent = compass_ascent(std::move(start), objective, cfg);
    });
    // Ties are rare; only serialize the strategies that share the top value.
    double top = outcomes[0].ascent.value;
    for (const auto &o : outcomes) {
        top = std::max(top, o.ascent.value);
    }
    for (auto &o : outcomes) {
        if (o.ascent.value == top) {
            o.tie_key = serialize_strategy(strategy_from_params(game, o.ascent.x, block, build, cls), game.name());
        }
    }
    size_t best = pick_best(outcomes);
    Strategy strategy = strategy_from_params(game, outcomes[best].ascent.x, block, build, cls);
    SearchResult result{win_rate(game, strategy), std::nullopt, std::move(strategy), 0, {}};
    for (size_t k = 0; k < total; k++) {
        result.evaluations += outcomes[k].ascent.evaluations;
        result.per_restart_rates.push_back(outcomes[k].ascent.value);
    }
    return result;
}

}  // namespace

SearchResult exhaustive_classical(const GameSpec &game, bool irreversible) {
    static constexpr std::array<ClassicalAction, 4> alphabet{ClassicalAction::Keep, ClassicalAction::Flip,
                                                             ClassicalAction::Erase0, ClassicalAction::Erase1};
    const int g = irreversible ? 4 : 2;
    const int slots = game.alice_size() + game.bob_size();
    if (std::pow(static_cast<double>(g), slots) > MAX_EXHAUSTIVE_ASSIGNMENTS) {
        throw SearchSpaceTooLarge(std::to_string(g) + "^" + std::to_string(slots) +
                                  " assignments exceed the exhaustive search limit of 1e8");
    }

    // Priors as integer numerators over a common denominator keep the search
    // exact without rational arithmetic in the inner loop.
    std::int64_t denominator = 1;
    for (const auto &p : game.prior_table()) {
        denominator = std::lcm(denominator, p.denominator());
    }
    std::vector<std::int64_t> weight;
    for (const auto &p : game.prior_table()) {
        weight.push_back(p.numerator() * (denominator / p.denominator()));
    }

    std::uint64_t total = 1;
    for (int k = 0; k < slots; k++) {
        total *= g;
    }
    std::vector<int> digits(slots, 0);
    std::vector<int> best_digits = digits;
    std::int64_t best_score = -1;
    for (std::uint64_t index = 0; index < total; index++) {
        std::uint64_t rest = index;
        for (int k = slots - 1; k >= 0; k--) {
            digits[k] = static_cast<int>(rest % g);
            rest /= g;
        }
        std::int64_t score = 0;
        for (int a = 0; a < game.alice_size(); a++) {
            int sent = apply_classical(alphabet[digits[a]], 0);
            for (int b = 0; b < game.bob_size(); b++) {
                int out = apply_classical(alphabet[digits[game.alice_size() + b]], sent);
                if (game.win(a, b).contains(out)) {
                    score += weight[static_cast<size_t>(a) * game.bob_size() + b];
                }
            }
        }
        if (score > best_score) {
            best_score = score;
            best_digits = digits;
        }
    }

    std::vector<Gate> alice;
    std::vector<Gate> bob;
    for (int k = 0; k < slots; k++) {
        (k < game.alice_size() ? alice : bob).push_back(gate_from_classical(alphabet[best_digits[k]]));
    }
    Rational exact(best_score, denominator);
    Strategy strategy(std::move(alice), std::move(bob),
                      irreversible ? GateClass::ClassicalIrreversible : GateClass::ClassicalReversible);
    return {boost::rational_cast<double>(exact), exact, std::move(strategy), total, {}};
}

SearchResult optimize_unitary(const GameSpec &game, const OptimConfig &cfg) {
    return multi_start<UnitaryObjective>(game, cfg, {}, 3, rotation_vector_gate, GateClass::QuantumReversible,
                                         [](std::mt19937_64 &rng, std::vector<double> &x) {
                                             std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                                                                          std::numbers::pi);
                                             for (auto &v : x) {
                                                 v = angle(rng);
                                             }
                                         });
}

SearchResult optimize_channel(const GameSpec &game, const OptimConfig &cfg) {
    cfg.validate();
    std::vector<const Strategy *> seeds;
    std::uint64_t warm_evaluations = 0;

    std::optional<SearchResult> classical;
    if (std::pow(4.0, game.alice_size() + game.bob_size()) <= MAX_EXHAUSTIVE_ASSIGNMENTS) {
        classical = exhaustive_classical(game, true);
        warm_evaluations += classical->evaluations;
        seeds.push_back(&classical->strategy);
    }
    SearchResult unitary = optimize_unitary(game, cfg);
    warm_evaluations += unitary.evaluations;
    seeds.push_back(&unitary.strategy);

    std::vector<std::vector<double>> warm_starts;
    for (const Strategy *s : seeds) {
        std::vector<double> x;
        for (const auto *side : {&s->alice(), &s->bob()}) {
            for (const auto &g : *side) {
                auto p = params_from_kraus(g.kraus());
                x.insert(x.end(), p.begin(), p.end());
            }
        }
        warm_starts.push_back(std::move(x));
    }

    auto result = multi_start<ChannelObjective>(game, cfg, std::move(warm_starts), CHANNEL_PARAM_COUNT,
                                                channel_gate_from_block, GateClass::QuantumIrreversible,
                                                [](std::mt19937_64 &rng, std::vector<double> &x) {
                                                    std::normal_distribution<double> normal(0, 1);
                                                    for (auto &v : x) {
                                                        v = normal(rng);
                                                    }
                                                });
    result.evaluations += warm_evaluations;
    return result;
}

SearchResult optimize_for_class(const GameSpec &game, GateClass c, const OptimConfig &cfg) {
    switch (c) {
        case GateClass::ClassicalReversible:
            return exhaustive_classical(game, false);
        case GateClass::ClassicalIrreversible:
            return exhaustive_classical(game, true);
        case GateClass::QuantumReversible:
            return optimize_unitary(game, cfg);
        case GateClass::QuantumIrreversible:
            return optimize_channel(game, cfg);
    }
    throw PreconditionViolated("unknown gate class");
}

}  // namespace ssg

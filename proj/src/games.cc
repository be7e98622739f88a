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

#include "ssg/games.h"

#include <charconv>
#include <numbers>

#include "ssg/errors.h"

namespace ssg {

std::string format_rational(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rational> parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
        if (!s.empty() && s.front() == '+') {
            s.remove_prefix(1);
        }
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            return std::nullopt;
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto v = parse_int(text);
        if (!v) {
            return std::nullopt;
        }
        return Rational(*v);
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) {
        return std::nullopt;
    }
    return Rational(*num, *den);
}

GameSpec::GameSpec(std::string name, int alice_size, int bob_size, std::vector<Rational> prior,
                   std::vector<WinSet> win)
    : name_(std::move(name)),
      alice_size_(alice_size),
      bob_size_(bob_size),
      prior_(std::move(prior)),
      win_(std::move(win)) {
    if (alice_size_ <= 0 || bob_size_ <= 0) {
        throw ValidationError("alphabet sizes must be positive");
    }
    size_t cells = static_cast<size_t>(alice_size_) * bob_size_;
    if (prior_.size() != cells || win_.size() != cells) {
        throw ValidationError("prior and win tables must have alice x bob entries");
    }
    Rational total = 0;
    for (const auto &p : prior_) {
        if (p < Rational(0)) {
            throw ValidationError("prior entry " + format_rational(p) + " is negative");
        }
        total += p;
    }
    if (total != Rational(1)) {
        throw ValidationError("priors sum to " + format_rational(total) + ", expected 1");
    }
}

Strategy::Strategy(std::vector<Gate> alice, std::vector<Gate> bob, GateClass claimed_class)
    : alice_(std::move(alice)), bob_(std::move(bob)), claimed_class_(claimed_class) {
    auto check = [&](const std::vector<Gate> &gates, const char *who) {
        for (size_t k = 0; k < gates.size(); k++) {
            if (!gate_in_class(gates[k], claimed_class_)) {
                throw InvalidGate(std::string(who) + " gate " + std::to_string(k) + " is not " +
                                  std::string(gate_class_long_name(claimed_class_)));
            }
        }
    };
    check(alice_, "alice");
    check(bob_, "bob");
}

GateClass smallest_class(const std::vector<Gate> &alice, const std::vector<Gate> &bob) {
    for (auto c : {GateClass::ClassicalReversible, GateClass::ClassicalIrreversible, GateClass::QuantumReversible}) {
        bool all = true;
        for (const auto *side : {&alice, &bob}) {
            for (const auto &g : *side) {
                all = all && gate_in_class(g, c);
            }
        }
        if (all) {
            return c;
        }
    }
    return GateClass::QuantumIrreversible;
}

double outcome_one_probability(const Gate &alice_gate, const Gate &bob_gate) {
    return measure_rect(apply_gate(apply_gate(DensityMatrix::ket0(), alice_gate), bob_gate));
}

namespace {

void check_shape(const GameSpec &game, const Strategy &s) {
    if (static_cast<int>(s.alice().size()) != game.alice_size() ||
        static_cast<int>(s.bob().size()) != game.bob_size()) {
        throw ShapeMismatch("strategy has " + std::to_string(s.alice().size()) + "x" +
                            std::to_string(s.bob().size()) + " gates but game " + game.name() + " is " +
                            std::to_string(game.alice_size()) + "x" + std::to_string(game.bob_size()));
    }
}

double to_double(const Rational &r) {
    return boost::rational_cast<double>(r);
}

}  // namespace

double win_rate(const GameSpec &game, const Strategy &s) {
    check_shape(game, s);
    double total = 0;
    for (int a = 0; a < game.alice_size(); a++) {
        for (int b = 0; b < game.bob_size(); b++) {
            double p = to_double(game.prior(a, b));
            if (p == 0) {
                continue;
            }
            double q = outcome_one_probability(s.alice()[a], s.bob()[b]);
            total += p * (game.wins(a, b, 1) * q + game.wins(a, b, 0) * (1 - q));
        }
    }
    return clamp_probability(total);
}

std::optional<Rational> win_rate_exact(const GameSpec &game, const Strategy &s) {
    check_shape(game, s);
    std::vector<ClassicalAction> alice;
    std::vector<ClassicalAction> bob;
    for (const auto &[gates, out] : {std::pair{&s.alice(), &alice}, std::pair{&s.bob(), &bob}}) {
        for (const auto &g : *gates) {
            auto action = classical_action(g);
            if (!action) {
                return std::nullopt;
            }
            out->push_back(*action);
        }
    }
    Rational total = 0;
    for (int a = 0; a < game.alice_size(); a++) {
        int sent = apply_classical(alice[a], 0);
        for (int b = 0; b < game.bob_size(); b++) {
            if (game.win(a, b).contains(apply_classical(bob[b], sent))) {
                total += game.prior(a, b);
            }
        }
    }
    return total;
}

std::vector<std::string> builtin_game_names() {
    return {"chsh_star", "ei_chsh_star", "game32", "b32"};
}

namespace {

WinSet singleton(int outcome) {
    return outcome == 0 ? WinSet{true, false} : WinSet{false, true};
}

GameSpec make_chsh_star() {
    std::vector<Rational> prior(4, Rational(1, 4));
    std::vector<WinSet> win;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            win.push_back(singleton(a * b));
        }
    }
    return GameSpec("chsh_star", 2, 2, prior, win);
}

GameSpec make_ei_chsh_star() {
    std::vector<Rational> prior(8, Rational(1, 8));
    std::vector<WinSet> win;
    for (int a = 0; a < 4; a++) {
        int a1 = a / 2;
        int a2 = a % 2;
        for (int b = 0; b < 2; b++) {
            win.push_back(singleton((a1 * b) ^ a2));
        }
    }
    return GameSpec("ei_chsh_star", 4, 2, prior, win);
}

GameSpec make_game32(bool biased) {
    std::vector<Rational> prior;
    std::vector<WinSet> win;
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < 3; b++) {
            if (biased) {
                prior.push_back(a == b ? Rational(1, 15) : Rational(2, 15));
            } else {
                prior.push_back(Rational(1, 9));
            }
            win.push_back(singleton(a == b ? 1 : 0));
        }
    }
    return GameSpec(biased ? "b32" : "game32", 3, 3, prior, win);
}

Gate x_power(int k) {
    return k % 2 == 0 ? Gate::identity() : Gate::bit_flip();
}

}  // namespace

GameSpec builtin_game(std::string_view name) {
    if (name == "chsh_star") {
        return make_chsh_star();
    }
    if (name == "ei_chsh_star") {
        return make_ei_chsh_star();
    }
    if (name == "game32") {
        return make_game32(false);
    }
    if (name == "b32") {
        return make_game32(true);
    }
    throw UnknownGame("unknown game '" + std::string(name) + "'");
}

std::vector<NamedStrategyInfo> named_strategy_list() {
    return {
        {"game32_classical_79", "game32", "A_a = X^a, B_b = X^(b+1); classical reversible, wins 7/9"},
        {"game32_quantum_56", "game32", "A_a = X R^a, B_b = R^(2b) with R the 2pi/3 x-rotation; wins 5/6"},
        {"b32_irreversible_1315", "b32", "Alice X iff a = 0; Bob I if b = 0 else erase to 0; wins 13/15"},
        {"chsh_irreversible_perfect", "chsh_star", "Alice X^a; Bob erase to 0 if b = 0 else I; wins 1"},
    };
}

Strategy named_strategy(std::string_view name) {
    if (name == "game32_classical_79") {
        std::vector<Gate> alice;
        std::vector<Gate> bob;
        for (int k = 0; k < 3; k++) {
            alice.push_back(x_power(k));
            bob.push_back(x_power(k + 1));
        }
        return Strategy(alice, bob, GateClass::ClassicalReversible);
    }
    if (name == "game32_quantum_56") {
        Mat2 x = pauli(Pauli::X);
        Mat2 r = su2_matrix({1, 0, 0}, 2 * std::numbers::pi / 3);
        auto power = [](const Mat2 &m, int k) {
            Mat2 out = Mat2::identity();
            for (int t = 0; t < k; t++) {
                out = out * m;
            }
            return out;
        };
        std::vector<Gate> alice;
        std::vector<Gate> bob;
        for (int k = 0; k < 3; k++) {
            alice.push_back(unitary_from_matrix(x * power(r, k)));
            bob.push_back(unitary_from_matrix(power(r, 2 * k)));
        }
        return Strategy(alice, bob, GateClass::QuantumReversible);
    }
    if (name == "b32_irreversible_1315") {
        std::vector<Gate> alice{Gate::bit_flip(), Gate::identity(), Gate::identity()};
        std::vector<Gate> bob{Gate::identity(), Gate::erase_to(0), Gate::erase_to(0)};
        return Strategy(alice, bob, GateClass::ClassicalIrreversible);
    }
    if (name == "chsh_irreversible_perfect") {
        std::vector<Gate> alice{Gate::identity(), Gate::bit_flip()};
        std::vector<Gate> bob{Gate::erase_to(0), Gate::identity()};
        return Strategy(alice, bob, GateClass::ClassicalIrreversible);
    }
    throw UnknownStrategy("unknown strategy '" + std::string(name) + "'");
}

ErasureReport erasure_immune_condition(const GameSpec &game) {
    ErasureReport report{{}, false};
    for (int b = 0; b < game.bob_size(); b++) {
        BobBalance balance{0, 0};
        for (int a = 0; a < game.alice_size(); a++) {
            balance.sum0 += game.prior(a, b) * game.wins(a, b, 0);
            balance.sum1 += game.prior(a, b) * game.wins(a, b, 1);
        }
        report.condition_holds = report.condition_holds || balance.sum0 != balance.sum1;
        report.per_bob.push_back(balance);
    }
    return report;
}

bool prop5_applies(const GameSpec &game) {
    return 2 >= game.alice_size();
}

Strategy ei_transform(const Strategy &s) {
    if (s.claimed_class() != GateClass::ClassicalReversible && s.claimed_class() != GateClass::QuantumReversible) {
        throw NotReversible("the EI transform needs a reversible strategy, got " +
                            std::string(gate_class_long_name(s.claimed_class())));
    }
    if (s.alice().size() != 2 || s.bob().size() != 2) {
        throw ShapeMismatch("the EI transform needs a 2x2 chsh_star strategy");
    }
    std::vector<Gate> alice;
    for (int a = 0; a < 4; a++) {
        int a1 = a / 2;
        int a2 = a % 2;
        alice.push_back(compose(x_power(a2), s.alice()[a1]));
    }
    return Strategy(alice, s.bob(), s.claimed_class());
}

}  // namespace ssg

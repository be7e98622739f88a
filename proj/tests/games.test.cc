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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "ssg/errors.h"
#include "test_util.h"

using namespace ssg;

namespace {

constexpr double PI = std::numbers::pi;

/// Win rate from state vectors: both gates unitary, q = |<1|B A|0>|^2.
double statevector_win_rate(const GameSpec &game, const std::vector<Mat2> &alice, const std::vector<Mat2> &bob) {
    double total = 0;
    for (int a = 0; a < game.alice_size(); a++) {
        for (int b = 0; b < game.bob_size(); b++) {
            Mat2 m = bob[b] * alice[a];
            double q = std::norm(m(1, 0));
            double p = boost::rational_cast<double>(game.prior(a, b));
            total += p * (game.wins(a, b, 1) * q + game.wins(a, b, 0) * (1 - q));
        }
    }
    return total;
}

Strategy random_unitary_strategy(std::mt19937_64 &rng, int na, int nb) {
    std::vector<Gate> alice, bob;
    for (int k = 0; k < na; k++) {
        alice.push_back(ssg_test::random_unitary(rng));
    }
    for (int k = 0; k < nb; k++) {
        bob.push_back(ssg_test::random_unitary(rng));
    }
    return Strategy(alice, bob, GateClass::QuantumReversible);
}

std::vector<Rational> random_prior(std::mt19937_64 &rng, size_t cells) {
    std::uniform_int_distribution<int> w(0, 12);
    std::vector<int> weights(cells);
    int total = 0;
    while (total == 0) {
        total = 0;
        for (auto &x : weights) {
            x = w(rng);
            total += x;
        }
    }
    std::vector<Rational> out;
    for (int x : weights) {
        out.emplace_back(x, total);
    }
    return out;
}

}  // namespace

TEST(games, rationals) {
    EXPECT_EQ(format_rational(Rational(2, 6)), "1/3");
    EXPECT_EQ(format_rational(Rational(4, 2)), "2");
    EXPECT_EQ(parse_rational("7/9"), Rational(7, 9));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("2/-4"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("1/0"), std::nullopt);
    EXPECT_EQ(parse_rational("x"), std::nullopt);
    EXPECT_EQ(parse_rational("1/"), std::nullopt);
}

TEST(games, builtin_games) {
    GameSpec g32 = builtin_game("game32");
    EXPECT_EQ(g32.prior(0, 0), Rational(1, 9));
    EXPECT_EQ(g32.alice_size(), 3);
    EXPECT_EQ(builtin_game("b32").prior(0, 1), Rational(2, 15));
    EXPECT_EQ(builtin_game("b32").prior(2, 2), Rational(1, 15));
    GameSpec ei = builtin_game("ei_chsh_star");
    EXPECT_EQ(ei.alice_size(), 4);
    EXPECT_EQ(ei.win(3, 1), (WinSet{true, false}));
    EXPECT_EQ(ei.win(2, 1), (WinSet{false, true}));
    GameSpec chsh = builtin_game("chsh_star");
    EXPECT_EQ(chsh.win(1, 1), (WinSet{false, true}));
    EXPECT_EQ(chsh.win(0, 1), (WinSet{true, false}));
    for (const auto &name : builtin_game_names()) {
        GameSpec g = builtin_game(name);
        Rational total(0);
        for (const auto &p : g.prior_table()) {
            total += p;
        }
        EXPECT_EQ(total, Rational(1)) << name;
        EXPECT_EQ(g.name(), name);
    }
    EXPECT_THROW(builtin_game("nope"), UnknownGame);
}

TEST(games, game_spec_validation) {
    std::vector<WinSet> win(4, WinSet{true, false});
    EXPECT_THROW(GameSpec("g", 2, 2, std::vector<Rational>(4, Rational(2, 9)), win), ValidationError);
    EXPECT_THROW(GameSpec("g", 2, 2, {Rational(1), Rational(-1, 2), Rational(1, 2), Rational(0)}, win),
                 ValidationError);
    EXPECT_THROW(GameSpec("g", 2, 2, std::vector<Rational>(3, Rational(1, 3)), win), ValidationError);
    EXPECT_THROW(GameSpec("g", 0, 2, {}, {}), ValidationError);
    EXPECT_NO_THROW(GameSpec("g", 2, 2, std::vector<Rational>(4, Rational(1, 4)), win));
}

TEST(games, win_rate_examples) {
    GameSpec g32 = builtin_game("game32");
    std::vector<Gate> a{Gate::identity(), Gate::bit_flip(), Gate::identity()};
    std::vector<Gate> b{Gate::bit_flip(), Gate::identity(), Gate::bit_flip()};
    Strategy s(a, b, GateClass::ClassicalReversible);
    EXPECT_EQ(win_rate_exact(g32, s), Rational(7, 9));
    EXPECT_NEAR(win_rate(g32, s), 7.0 / 9, 1e-15);

    // X R^a and R^{2b}, built from independent matrices.
    Mat2 r = *unitary_matrix(rotation_x(2 * PI / 3));
    Mat2 x = pauli(Pauli::X);
    std::vector<Mat2> am{x, x * r, x * r * r};
    std::vector<Mat2> bm{Mat2::identity(), r * r, r * r * r * r};
    EXPECT_NEAR(statevector_win_rate(g32, am, bm), 5.0 / 6, 1e-12);
    EXPECT_NEAR(win_rate(g32, named_strategy("game32_quantum_56")), 5.0 / 6, 1e-12);

    GameSpec b32 = builtin_game("b32");
    Strategy s1315({Gate::bit_flip(), Gate::identity(), Gate::identity()},
                   {Gate::identity(), Gate::erase_to(0), Gate::erase_to(0)}, GateClass::ClassicalIrreversible);
    EXPECT_EQ(win_rate_exact(b32, s1315), Rational(13, 15));

    GameSpec chsh = builtin_game("chsh_star");
    Strategy ident({Gate::identity(), Gate::identity()}, {Gate::identity(), Gate::identity()},
                   GateClass::ClassicalReversible);
    EXPECT_EQ(win_rate_exact(chsh, ident), Rational(3, 4));
    EXPECT_NEAR(win_rate(chsh, ident), 0.75, 1e-15);

    EXPECT_THROW(win_rate(g32, ident), ShapeMismatch);
    EXPECT_THROW(win_rate_exact(g32, ident), ShapeMismatch);
    EXPECT_FALSE(win_rate_exact(g32, named_strategy("game32_quantum_56")).has_value());
}

TEST(games, win_rate_matches_statevector_oracle) {
    std::mt19937_64 rng(20);
    for (const auto &name : builtin_game_names()) {
        GameSpec g = builtin_game(name);
        for (int k = 0; k < 50; k++) {
            Strategy s = random_unitary_strategy(rng, g.alice_size(), g.bob_size());
            std::vector<Mat2> am, bm;
            for (const auto &gate : s.alice()) {
                am.push_back(*unitary_matrix(gate));
            }
            for (const auto &gate : s.bob()) {
                bm.push_back(*unitary_matrix(gate));
            }
            ASSERT_NEAR(win_rate(g, s), statevector_win_rate(g, am, bm), 1e-12);
        }
    }
}

TEST(games, named_strategies) {
    EXPECT_EQ(named_strategy_list().size(), 4u);
    EXPECT_THROW(named_strategy("nope"), UnknownStrategy);
    GameSpec g32 = builtin_game("game32");
    Strategy s79 = named_strategy("game32_classical_79");
    EXPECT_EQ(s79.claimed_class(), GateClass::ClassicalReversible);
    EXPECT_EQ(win_rate_exact(g32, s79), Rational(7, 9));
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < 3; b++) {
            double q = outcome_one_probability(s79.alice()[a], s79.bob()[b]);
            bool won = g32.wins(a, b, q > 0.5 ? 1 : 0);
            bool expected_loss = (a == 0 && b == 2) || (a == 2 && b == 0);
            EXPECT_EQ(won, !expected_loss) << a << "," << b;
        }
    }
    Strategy s56 = named_strategy("game32_quantum_56");
    EXPECT_EQ(s56.claimed_class(), GateClass::QuantumReversible);
    EXPECT_NEAR(win_rate(g32, s56), 5.0 / 6, 1e-12);
    Strategy s1315 = named_strategy("b32_irreversible_1315");
    EXPECT_EQ(s1315.claimed_class(), GateClass::ClassicalIrreversible);
    EXPECT_EQ(win_rate_exact(builtin_game("b32"), s1315), Rational(13, 15));
    Strategy perfect = named_strategy("chsh_irreversible_perfect");
    EXPECT_EQ(win_rate_exact(builtin_game("chsh_star"), perfect), Rational(1));
    EXPECT_NEAR(win_rate(builtin_game("chsh_star"), perfect), 1, 1e-15);
}

TEST(games, strategy_class_is_enforced) {
    EXPECT_THROW(Strategy({Gate::erase_to(0)}, {Gate::identity()}, GateClass::ClassicalReversible), InvalidGate);
    EXPECT_THROW(Strategy({rotation_x(1)}, {Gate::identity()}, GateClass::ClassicalIrreversible), InvalidGate);
    EXPECT_NO_THROW(Strategy({rotation_x(1)}, {Gate::erase_to(1)}, GateClass::QuantumIrreversible));
    EXPECT_EQ(smallest_class({rotation_x(1)}, {Gate::erase_to(1)}), GateClass::QuantumIrreversible);
    EXPECT_EQ(smallest_class({Gate::bit_flip()}, {Gate::erase_to(1)}), GateClass::ClassicalIrreversible);
    EXPECT_EQ(smallest_class({rotation_x(1)}, {Gate::bit_flip()}), GateClass::QuantumReversible);
    EXPECT_EQ(smallest_class({Gate::bit_flip()}, {Gate::identity()}), GateClass::ClassicalReversible);
}

TEST(games, win_rate_is_affine_in_prior) {
    std::mt19937_64 rng(21);
    std::vector<WinSet> win{{true, false}, {false, true}, {true, true}, {false, false}, {true, false}, {false, true}};
    for (int k = 0; k < 100; k++) {
        auto p1 = random_prior(rng, 6);
        auto p2 = random_prior(rng, 6);
        Rational lambda(k % 7 + 1, 9);
        std::vector<Rational> mix;
        for (size_t j = 0; j < 6; j++) {
            mix.push_back(lambda * p1[j] + (Rational(1) - lambda) * p2[j]);
        }
        GameSpec g1("g", 2, 3, p1, win), g2("g", 2, 3, p2, win), gm("g", 2, 3, mix, win);
        Strategy s = k % 2 ? random_unitary_strategy(rng, 2, 3)
                           : Strategy({ssg_test::random_channel(rng), ssg_test::random_unitary(rng)},
                                      {ssg_test::random_channel(rng), Gate::erase_to(1), Gate::bit_flip()},
                                      GateClass::QuantumIrreversible);
        double l = boost::rational_cast<double>(lambda);
        ASSERT_NEAR(win_rate(gm, s), l * win_rate(g1, s) + (1 - l) * win_rate(g2, s), 1e-12);
    }
}

TEST(games, relabeling_alice_inputs_preserves_win_rate) {
    std::mt19937_64 rng(22);
    for (const auto &name : builtin_game_names()) {
        GameSpec g = builtin_game(name);
        int na = g.alice_size(), nb = g.bob_size();
        std::vector<int> perm(na);
        for (int k = 0; k < 20; k++) {
            for (int a = 0; a < na; a++) {
                perm[a] = a;
            }
            std::shuffle(perm.begin(), perm.end(), rng);
            Strategy s = random_unitary_strategy(rng, na, nb);
            std::vector<Rational> prior;
            std::vector<WinSet> win;
            std::vector<Gate> alice;
            for (int a = 0; a < na; a++) {
                for (int b = 0; b < nb; b++) {
                    prior.push_back(g.prior(perm[a], b));
                    win.push_back(g.win(perm[a], b));
                }
                alice.push_back(s.alice()[perm[a]]);
            }
            GameSpec permuted(name, na, nb, prior, win);
            Strategy ps(alice, s.bob(), s.claimed_class());
            ASSERT_NEAR(win_rate(permuted, ps), win_rate(g, s), 1e-12);
        }
    }
}

TEST(games, erasure_immune_condition) {
    auto ei = erasure_immune_condition(builtin_game("ei_chsh_star"));
    EXPECT_FALSE(ei.condition_holds);
    for (const auto &bal : ei.per_bob) {
        EXPECT_EQ(bal.sum0, bal.sum1);
    }
    auto chsh = erasure_immune_condition(builtin_game("chsh_star"));
    EXPECT_TRUE(chsh.condition_holds);
    EXPECT_EQ(chsh.per_bob[0].sum0, Rational(1, 2));
    EXPECT_EQ(chsh.per_bob[0].sum1, Rational(0));
    auto g32 = erasure_immune_condition(builtin_game("game32"));
    EXPECT_TRUE(g32.condition_holds);
    ASSERT_EQ(g32.per_bob.size(), 3u);
    for (const auto &bal : g32.per_bob) {
        EXPECT_EQ(bal.sum0, Rational(2, 9));
        EXPECT_EQ(bal.sum1, Rational(1, 9));
    }
    EXPECT_TRUE(erasure_immune_condition(builtin_game("b32")).condition_holds);
}

TEST(games, prop5_applies) {
    EXPECT_TRUE(prop5_applies(builtin_game("chsh_star")));
    EXPECT_FALSE(prop5_applies(builtin_game("game32")));
    EXPECT_FALSE(prop5_applies(builtin_game("ei_chsh_star")));
    EXPECT_FALSE(prop5_applies(builtin_game("b32")));
}

TEST(games, erasure_never_beats_best_flip_on_balanced_game) {
    GameSpec g = builtin_game("ei_chsh_star");
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int k = 0; k < 300; k++) {
        std::vector<Gate> alice;
        for (int a = 0; a < 4; a++) {
            alice.push_back(coin(rng) == 0 ? ssg_test::random_unitary(rng) : ssg_test::random_channel(rng));
        }
        std::vector<Gate> bob;
        for (int b = 0; b < 2; b++) {
            int c = coin(rng);
            bob.push_back(c == 0 ? Gate::erase_to(k % 2) : c == 1 ? ssg_test::random_channel(rng) : Gate::erase_to(1));
        }
        Strategy s(alice, bob, GateClass::QuantumIrreversible);
        double base = win_rate(g, s);
        for (int b = 0; b < 2; b++) {
            if (!std::holds_alternative<EraseGate>(bob[b].variant())) {
                continue;
            }
            double best = 0;
            for (const auto &replacement : {Gate::identity(), Gate::bit_flip()}) {
                auto modified = bob;
                modified[b] = replacement;
                best = std::max(best, win_rate(g, Strategy(alice, modified, GateClass::QuantumIrreversible)));
            }
            ASSERT_GE(best, base - 1e-12);
        }
    }
}

TEST(games, ei_transform) {
    GameSpec chsh = builtin_game("chsh_star");
    GameSpec ei = builtin_game("ei_chsh_star");
    Strategy ident({Gate::identity(), Gate::identity()}, {Gate::identity(), Gate::identity()},
                   GateClass::ClassicalReversible);
    Strategy t = ei_transform(ident);
    EXPECT_EQ(t.alice().size(), 4u);
    EXPECT_EQ(win_rate_exact(ei, t), Rational(3, 4));

    std::mt19937_64 rng(24);
    for (int k = 0; k < 200; k++) {
        Strategy s = random_unitary_strategy(rng, 2, 2);
        Strategy ts = ei_transform(s);
        ASSERT_EQ(ts.alice().size(), 4u);
        for (const auto &g : ts.alice()) {
            ASSERT_TRUE(std::holds_alternative<UnitaryGate>(g.variant()));
        }
        ASSERT_NEAR(win_rate(ei, ts), win_rate(chsh, s), 1e-12);
    }

    EXPECT_THROW(ei_transform(named_strategy("chsh_irreversible_perfect")), NotReversible);
    EXPECT_THROW(ei_transform(named_strategy("game32_classical_79")), ShapeMismatch);
}

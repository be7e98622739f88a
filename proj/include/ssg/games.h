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

#ifndef SSG_GAMES_H
#define SSG_GAMES_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "ssg/gates.h"

namespace ssg {

/// Exact prior probabilities. Always reduced with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational &r);
/// Parses "p/q" or an integer. Returns nullopt on malformed text or a zero
/// denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Set of winning measurement outcomes for one input pair.
struct WinSet {
    bool zero = false;
    bool one = false;

    bool contains(int outcome) const {
        return outcome == 0 ? zero : one;
    }
    bool operator==(const WinSet &) const = default;
};

/// A two-player single-system game on a qubit: input alphabets, exact joint
/// prior and winning outcomes per input pair.
class GameSpec {
   public:
    /// Throws ValidationError when sizes disagree, a prior is negative or the
    /// priors do not sum to exactly 1.
    GameSpec(std::string name, int alice_size, int bob_size, std::vector<Rational> prior, std::vector<WinSet> win);

    const std::string &name() const {
        return name_;
    }
    int alice_size() const {
        return alice_size_;
    }
    int bob_size() const {
        return bob_size_;
    }
    const Rational &prior(int a, int b) const {
        return prior_[index(a, b)];
    }
    const WinSet &win(int a, int b) const {
        return win_[index(a, b)];
    }
    /// W^{(o)}_{a,b} as 0/1.
    int wins(int a, int b, int outcome) const {
        return win(a, b).contains(outcome) ? 1 : 0;
    }
    const std::vector<Rational> &prior_table() const {
        return prior_;
    }
    const std::vector<WinSet> &win_table() const {
        return win_;
    }

    bool operator==(const GameSpec &) const = default;

   private:
    size_t index(int a, int b) const {
        return static_cast<size_t>(a) * bob_size_ + b;
    }
    std::string name_;
    int alice_size_;
    int bob_size_;
    std::vector<Rational> prior_;
    std::vector<WinSet> win_;
};

/// Per-input gate assignment for both players plus the gate class it claims.
class Strategy {
   public:
    /// Throws InvalidGate when a gate lies outside claimed_class.
    Strategy(std::vector<Gate> alice, std::vector<Gate> bob, GateClass claimed_class);

    const std::vector<Gate> &alice() const {
        return alice_;
    }
    const std::vector<Gate> &bob() const {
        return bob_;
    }
    GateClass claimed_class() const {
        return claimed_class_;
    }

   private:
    std::vector<Gate> alice_;
    std::vector<Gate> bob_;
    GateClass claimed_class_;
};

/// Smallest class containing every gate of both players.
GateClass smallest_class(const std::vector<Gate> &alice, const std::vector<Gate> &bob);

/// Probability that the measurement yields 1 after A then B act on |0>.
double outcome_one_probability(const Gate &alice_gate, const Gate &bob_gate);

/// Winning probability. Throws ShapeMismatch when the strategy's alphabets
/// differ from the game's.
double win_rate(const GameSpec &game, const Strategy &s);

/// Exact winning probability when every gate acts classically.
std::optional<Rational> win_rate_exact(const GameSpec &game, const Strategy &s);

std::vector<std::string> builtin_game_names();
/// chsh_star, ei_chsh_star, game32 or b32. Throws UnknownGame.
GameSpec builtin_game(std::string_view name);

struct NamedStrategyInfo {
    std::string name;
    std::string game;
    std::string description;
};
std::vector<NamedStrategyInfo> named_strategy_list();
/// Throws UnknownStrategy.
Strategy named_strategy(std::string_view name);

struct BobBalance {
    Rational sum0;
    Rational sum1;
};
struct ErasureReport {
    std::vector<BobBalance> per_bob;
    /// True when some Bob input has sum0 != sum1, i.e. an erasure advantage is
    /// not ruled out. False means the game is erasure-immune.
    bool condition_holds;
};

/// Balanced-sum test: for every Bob input compares Sum_a p W^{(0)} against
/// Sum_a p W^{(1)}. Balanced on every input means erasing can never beat the
/// better of I and X, so classical irreversible gates give no advantage.
ErasureReport erasure_immune_condition(const GameSpec &game);

/// True when the qubit is at least as large as Alice's alphabet, in which case
/// classical (ir)reversible strategies already match quantum ones.
bool prop5_applies(const GameSpec &game);

/// Lifts a reversible chsh_star strategy to ei_chsh_star. Alice's input
/// (a1, a2) is encoded as 2 a1 + a2 and receives X^{a2} followed by A_{a1},
/// fused into one gate. Throws NotReversible or ShapeMismatch.
Strategy ei_transform(const Strategy &s);

}  // namespace ssg

#endif

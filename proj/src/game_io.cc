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

#include "ssg/game_io.h"

#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "ssg/errors.h"

namespace ssg {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::string raw;
};

/// Splits text into significant lines, dropping comments and blank lines.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        number++;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string> tokens;
        std::istringstream ss{std::string(line)};
        for (std::string t; ss >> t;) {
            tokens.push_back(t);
        }
        if (!tokens.empty()) {
            out.push_back({number, std::move(tokens), std::string(line)});
        }
        pos = end + 1;
    }
    return out;
}

std::optional<int> parse_count(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::optional<double> parse_real(const std::string &s) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) {
            return std::nullopt;
        }
        return v;
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

/// "key: value" with the value being the remaining raw text, trimmed.
std::optional<std::string> keyed_value(const Line &line, std::string_view key) {
    std::string prefix = std::string(key) + ":";
    if (line.tokens.front().rfind(prefix, 0) != 0) {
        return std::nullopt;
    }
    size_t at = line.raw.find(':');
    std::string rest = line.raw.substr(at + 1);
    size_t b = rest.find_first_not_of(" \t\r");
    size_t e = rest.find_last_not_of(" \t\r");
    if (b == std::string::npos) {
        return std::string();
    }
    return rest.substr(b, e - b + 1);
}

std::optional<WinSet> parse_win_token(std::string_view t) {
    if (t == "0") {
        return WinSet{true, false};
    }
    if (t == "1") {
        return WinSet{false, true};
    }
    if (t == "01") {
        return WinSet{true, true};
    }
    if (t == "-") {
        return WinSet{false, false};
    }
    return std::nullopt;
}

std::string win_token(const WinSet &w) {
    if (w.zero && w.one) {
        return "01";
    }
    if (w.zero) {
        return "0";
    }
    if (w.one) {
        return "1";
    }
    return "-";
}

int last_line_number(const std::vector<Line> &lines) {
    return lines.empty() ? 1 : lines.back().number;
}

}  // namespace

std::string format_double_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

GameSpec parse_game(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty() || lines[0].tokens != std::vector<std::string>{"ssg-game", "v1"}) {
        throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'ssg-game v1'");
    }
    std::optional<std::string> name;
    std::optional<int> alice;
    std::optional<int> bob;
    std::vector<Rational> prior;
    std::vector<WinSet> win;
    bool have_prior = false;
    bool have_win = false;

    auto need_sizes = [&](const Line &line) {
        if (!alice || !bob) {
            throw ParseError(line.number, "'alice:' and 'bob:' must precede tables");
        }
    };

    size_t k = 1;
    while (k < lines.size()) {
        const Line &line = lines[k];
        if (auto v = keyed_value(line, "name")) {
            if (v->empty()) {
                throw ParseError(line.number, "empty game name");
            }
            name = *v;
            k++;
        } else if (auto v = keyed_value(line, "alice")) {
            alice = parse_count(*v);
            if (!alice || *alice <= 0) {
                throw ParseError(line.number, "alice size must be a positive integer");
            }
            k++;
        } else if (auto v = keyed_value(line, "bob")) {
            bob = parse_count(*v);
            if (!bob || *bob <= 0) {
                throw ParseError(line.number, "bob size must be a positive integer");
            }
            k++;
        } else if (line.tokens.size() == 1 && (line.tokens[0] == "prior:" || line.tokens[0] == "win:")) {
            need_sizes(line);
            bool is_prior = line.tokens[0] == "prior:";
            if ((is_prior && have_prior) || (!is_prior && have_win)) {
                throw ParseError(line.number, "duplicate '" + line.tokens[0] + "' table");
            }
            k++;
            for (int row = 0; row < *alice; row++, k++) {
                if (k >= lines.size()) {
                    throw ParseError(last_line_number(lines), "table '" + line.tokens[0] + "' is missing rows");
                }
                const Line &r = lines[k];
                if (static_cast<int>(r.tokens.size()) != *bob) {
                    throw ParseError(r.number, "expected " + std::to_string(*bob) + " entries, got " +
                                                   std::to_string(r.tokens.size()));
                }
                for (const auto &t : r.tokens) {
                    if (is_prior) {
                        auto p = parse_rational(t);
                        if (!p) {
                            throw ParseError(r.number, "malformed rational '" + t + "'");
                        }
                        prior.push_back(*p);
                    } else {
                        auto w = parse_win_token(t);
                        if (!w) {
                            throw ParseError(r.number, "win token must be one of 0, 1, 01, -; got '" + t + "'");
                        }
                        win.push_back(*w);
                    }
                }
            }
            (is_prior ? have_prior : have_win) = true;
        } else {
            throw ParseError(line.number, "unrecognized line '" + line.tokens[0] + "'");
        }
    }
    int end = last_line_number(lines);
    if (!name) {
        throw ParseError(end, "missing 'name:'");
    }
    if (!alice || !bob) {
        throw ParseError(end, "missing 'alice:' or 'bob:'");
    }
    if (!have_prior || !have_win) {
        throw ParseError(end, "missing 'prior:' or 'win:' table");
    }
    return GameSpec(*name, *alice, *bob, std::move(prior), std::move(win));
}

std::string serialize_game(const GameSpec &game) {
    std::ostringstream out;
    out << "ssg-game v1\n";
    out << "name: " << game.name() << "\n";
    out << "alice: " << game.alice_size() << "\n";
    out << "bob: " << game.bob_size() << "\n";
    out << "prior:\n";
    for (int a = 0; a < game.alice_size(); a++) {
        for (int b = 0; b < game.bob_size(); b++) {
            out << (b ? " " : "") << format_rational(game.prior(a, b));
        }
        out << "\n";
    }
    out << "win:\n";
    for (int a = 0; a < game.alice_size(); a++) {
        for (int b = 0; b < game.bob_size(); b++) {
            out << (b ? " " : "") << win_token(game.win(a, b));
        }
        out << "\n";
    }
    return out.str();
}

Strategy parse_strategy(std::string_view text, const GameSpec &game) {
    auto lines = significant_lines(text);
    if (lines.empty() || lines[0].tokens != std::vector<std::string>{"ssg-strategy", "v1"}) {
        throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'ssg-strategy v1'");
    }
    std::vector<std::optional<Gate>> alice(game.alice_size());
    std::vector<std::optional<Gate>> bob(game.bob_size());
    std::optional<GateClass> declared;

    size_t k = 1;
    while (k < lines.size()) {
        const Line &line = lines[k];
        if (keyed_value(line, "game")) {
            k++;
            continue;
        }
        if (auto v = keyed_value(line, "class")) {
            declared = parse_gate_class(*v);
            if (!declared) {
                throw ParseError(line.number, "class must be one of cr, ci, qr, qi");
            }
            k++;
            continue;
        }
        const auto &t = line.tokens;
        if (t.size() < 3 || (t[0] != "alice" && t[0] != "bob") || t[1].empty() || t[1].back() != ':') {
            throw ParseError(line.number, "expected '<alice|bob> <index>: <gate>'");
        }
        auto index = parse_count(std::string_view(t[1]).substr(0, t[1].size() - 1));
        auto &slots = t[0] == "alice" ? alice : bob;
        if (!index || *index < 0) {
            throw ParseError(line.number, "malformed gate index '" + t[1] + "'");
        }
        if (*index >= static_cast<int>(slots.size())) {
            throw ShapeMismatch(t[0] + " index " + std::to_string(*index) + " exceeds the game's alphabet of size " +
                                std::to_string(slots.size()));
        }
        if (slots[*index].has_value()) {
            throw ParseError(line.number, "duplicate gate for " + t[0] + " " + std::to_string(*index));
        }
        const std::string &kind = t[2];
        std::vector<std::string> args(t.begin() + 3, t.end());
        auto expect_args = [&](size_t n) {
            if (args.size() != n) {
                throw ParseError(line.number, "gate " + kind + " takes " + std::to_string(n) + " arguments");
            }
        };
        try {
            if (kind == "I") {
                expect_args(0);
                slots[*index] = Gate::identity();
            } else if (kind == "X") {
                expect_args(0);
                slots[*index] = Gate::bit_flip();
            } else if (kind == "E0" || kind == "E1") {
                expect_args(0);
                slots[*index] = Gate::erase_to(kind == "E1" ? 1 : 0);
            } else if (kind == "U") {
                expect_args(4);
                std::array<double, 4> v{};
                for (size_t j = 0; j < 4; j++) {
                    auto r = parse_real(args[j]);
                    if (!r) {
                        throw ParseError(line.number, "malformed number '" + args[j] + "'");
                    }
                    v[j] = *r;
                }
                slots[*index] = Gate::unitary({v[1], v[2], v[3]}, v[0]);
            } else if (kind == "KRAUS") {
                expect_args(1);
                auto count = parse_count(args[0]);
                if (!count || *count < 1 || *count > 4) {
                    throw ParseError(line.number, "KRAUS needs between 1 and 4 operators");
                }
                std::vector<Mat2> kraus;
                for (int j = 0; j < *count; j++) {
                    k++;
                    if (k >= lines.size()) {
                        throw ParseError(last_line_number(lines), "missing Kraus operator rows");
                    }
                    const Line &row = lines[k];
                    if (row.tokens.size() != 8) {
                        throw ParseError(row.number, "a Kraus operator row needs 8 numbers");
                    }
                    Mat2 m;
                    for (size_t e = 0; e < 4; e++) {
                        auto re = parse_real(row.tokens[2 * e]);
                        auto im = parse_real(row.tokens[2 * e + 1]);
                        if (!re || !im) {
                            throw ParseError(row.number, "malformed number in Kraus operator");
                        }
                        m.e[e] = Complex(*re, *im);
                    }
                    kraus.push_back(m);
                }
                slots[*index] = Gate::channel(std::move(kraus));
            } else {
                throw ParseError(line.number, "unknown gate '" + kind + "'");
            }
        } catch (const InvalidGate &e) {
            throw ParseError(line.number, e.what());
        }
        k++;
    }

    std::vector<Gate> a_gates;
    std::vector<Gate> b_gates;
    for (const auto &[slots, out, who] : {std::tuple{&alice, &a_gates, "alice"}, std::tuple{&bob, &b_gates, "bob"}}) {
        for (size_t j = 0; j < slots->size(); j++) {
            if (!(*slots)[j]) {
                throw ShapeMismatch(std::string("missing gate for ") + who + " " + std::to_string(j));
            }
            out->push_back(*(*slots)[j]);
        }
    }
    GateClass cls = declared.value_or(smallest_class(a_gates, b_gates));
    try {
        return Strategy(std::move(a_gates), std::move(b_gates), cls);
    } catch (const InvalidGate &e) {
        throw ValidationError(e.what());
    }
}

namespace {

void write_gate(std::ostringstream &out, const Gate &g) {
    std::visit(
        [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, IdentityGate>) {
                out << "I\n";
            } else if constexpr (std::is_same_v<T, BitFlipGate>) {
                out << "X\n";
            } else if constexpr (std::is_same_v<T, EraseGate>) {
                out << "E" << v.target << "\n";
            } else if constexpr (std::is_same_v<T, UnitaryGate>) {
                out << "U " << format_double_exact(v.angle) << " " << format_double_exact(v.axis.x) << " "
                    << format_double_exact(v.axis.y) << " " << format_double_exact(v.axis.z) << "\n";
            } else {
                out << "KRAUS " << v.kraus.size() << "\n";
                for (const auto &m : v.kraus) {
                    for (size_t e = 0; e < 4; e++) {
                        out << (e ? " " : "") << format_double_exact(m.e[e].real()) << " "
                            << format_double_exact(m.e[e].imag());
                    }
                    out << "\n";
                }
            }
        },
        g.variant());
}

}  // namespace

std::string serialize_strategy(const Strategy &s, std::string_view game_name) {
    std::ostringstream out;
    out << "ssg-strategy v1\n";
    out << "game: " << game_name << "\n";
    out << "class: " << gate_class_short_name(s.claimed_class()) << "\n";
    for (size_t a = 0; a < s.alice().size(); a++) {
        out << "alice " << a << ": ";
        write_gate(out, s.alice()[a]);
    }
    for (size_t b = 0; b < s.bob().size(); b++) {
        out << "bob " << b << ": ";
        write_gate(out, s.bob()[b]);
    }
    return out.str();
}

}  // namespace ssg

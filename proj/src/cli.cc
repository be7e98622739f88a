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

#include "ssg/cli.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ssg/bounds.h"
#include "ssg/errors.h"
#include "ssg/game_io.h"
#include "ssg/optimize.h"

namespace ssg {

std::string format_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

void RecordSet::add(const std::string &key, const std::string &value) {
    if (!records_.emplace(key, value).second) {
        throw std::logic_error("duplicate output key " + key);
    }
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return q + "\"";
}

}  // namespace

std::string RecordSet::render(bool csv) const {
    std::ostringstream out;
    for (const auto &[key, value] : records_) {
        if (csv) {
            out << csv_field(key) << "," << csv_field(value) << "\n";
        } else {
            out << key << " = " << value << "\n";
        }
    }
    return out.str();
}

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A built-in name or a path to a game file.
GameSpec resolve_game(const std::string &ref) {
    if (std::filesystem::is_regular_file(ref)) {
        return parse_game(read_file(ref));
    }
    return builtin_game(ref);
}

Strategy resolve_strategy(const std::string &ref, const GameSpec &game) {
    if (std::filesystem::is_regular_file(ref)) {
        return parse_strategy(read_file(ref), game);
    }
    return named_strategy(ref);
}

std::string format_vector(const BlochVector &v) {
    return format_decimal(v.x) + " " + format_decimal(v.y) + " " + format_decimal(v.z);
}

void add_bound_records(RecordSet &records, const BoundResult &bound) {
    records.add("bound.upper_bound", format_decimal(bound.upper_bound));
    for (size_t b = 0; b < bound.per_b_terms.size(); b++) {
        records.add("bound.per_b." + std::to_string(b), format_decimal(bound.per_b_terms[b]));
    }
    if (bound.dmax) {
        records.add("bound.dmax", std::to_string(*bound.dmax));
    }
    for (size_t a = 0; a < bound.argmax_vectors.size(); a++) {
        records.add("bound.vector." + std::to_string(a), format_vector(bound.argmax_vectors[a]));
    }
}

struct Window {
    double low;
    double high;
};

std::string describe(const Window &w) {
    if (w.high >= 2) {
        return ">= " + format_decimal(w.low);
    }
    return "[" + format_decimal(w.low) + ", " + format_decimal(w.high) + "]";
}

}  // namespace

std::vector<Table1Cell> compute_table1(std::uint64_t seed, int restarts) {
    const double tsirelson = 0.5 + std::numbers::sqrt2 / 4;
    const std::vector<std::string> games{"chsh_star", "ei_chsh_star", "game32", "b32"};
    const std::map<std::string, std::pair<Rational, Rational>> classical{
        {"chsh_star", {Rational(3, 4), Rational(1)}},
        {"ei_chsh_star", {Rational(3, 4), Rational(3, 4)}},
        {"game32", {Rational(7, 9), Rational(7, 9)}},
        {"b32", {Rational(4, 5), Rational(13, 15)}},
    };
    const std::map<std::string, Window> quantum_reversible{
        {"chsh_star", {tsirelson - 1e-4, tsirelson + 1e-6}},
        {"ei_chsh_star", {tsirelson - 1e-4, tsirelson + 1e-6}},
        {"game32", {5.0 / 6 - 1e-6, 5.0 / 6 + 1e-6}},
        {"b32", {0.8 - 1e-4, 0.8 + 1e-6}},
    };
    const std::map<std::string, Window> quantum_irreversible{
        {"chsh_star", {1 - 1e-6, 3}},
        {"game32", {5.0 / 6 - 1e-4, 5.0 / 6 + 1e-4}},
        {"b32", {13.0 / 15 - 1e-4, 13.0 / 15 + 1e-4}},
    };

    OptimConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;

    std::vector<Table1Cell> cells;
    for (auto cls : {GateClass::ClassicalReversible, GateClass::ClassicalIrreversible, GateClass::QuantumReversible,
                     GateClass::QuantumIrreversible}) {
        for (const auto &name : games) {
            GameSpec game = builtin_game(name);
            SearchResult r = optimize_for_class(game, cls, cfg);
            Table1Cell cell{name, cls, "", r.best_rate, true, true, ""};
            if (r.exact_rate) {
                const auto &[reversible, irreversible] = classical.at(name);
                Rational expected = cls == GateClass::ClassicalReversible ? reversible : irreversible;
                cell.value = format_rational(*r.exact_rate);
                cell.within_tolerance = *r.exact_rate == expected;
                cell.expectation = "= " + format_rational(expected);
            } else {
                const auto &windows = cls == GateClass::QuantumReversible ? quantum_reversible : quantum_irreversible;
                cell.value = format_decimal(r.best_rate);
                auto it = windows.find(name);
                if (it == windows.end()) {
                    cell.verified = false;
                    cell.value = "unverified: " + cell.value;
                    cell.expectation = "none";
                } else {
                    cell.within_tolerance = r.best_rate >= it->second.low && r.best_rate <= it->second.high;
                    cell.expectation = describe(it->second);
                }
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

namespace {

struct CommonOptions {
    bool csv = false;
};

int emit(const RecordSet &records, const CommonOptions &common, std::ostream &out) {
    out << records.render(common.csv);
    return EXIT_OK;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Single-system qubit games: evaluate, search and bound strategies.", "ssg"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string format = "text";
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    };

    std::string game_ref;
    std::string strategy_ref;
    std::string class_name;
    std::string out_path;
    OptimConfig cfg;
    std::vector<double> vectors;
    bool maximize = false;

    auto *list = app.add_subcommand("list", "List built-in games and named strategies");
    add_format(list);

    auto *eval = app.add_subcommand("eval", "Win rate of a strategy on a game");
    eval->add_option("--game", game_ref, "Built-in game name or game file")->required();
    eval->add_option("--strategy", strategy_ref, "Named strategy or strategy file")->required();
    add_format(eval);

    auto *optimize = app.add_subcommand("optimize", "Best strategy within a gate class");
    optimize->add_option("--game", game_ref, "Built-in game name or game file")->required();
    optimize->add_option("--class", class_name, "Gate class")->required()->check(CLI::IsMember({"cr", "ci", "qr", "qi"}));
    optimize->add_option("--restarts", cfg.restarts, "Random restarts")->check(CLI::PositiveNumber);
    optimize->add_option("--seed", cfg.seed, "Base seed");
    optimize->add_option("--max-iters", cfg.max_iters, "Sweeps per restart")->check(CLI::PositiveNumber);
    optimize->add_option("--out", out_path, "Write the best strategy to this file");
    add_format(optimize);

    auto *bound = app.add_subcommand("bound", "Discrimination upper bound on quantum win rates");
    bound->add_option("--game", game_ref, "Built-in game name or game file")->required();
    auto *maximize_flag = bound->add_flag("--maximize", maximize, "Maximize over Alice's states");
    auto *vectors_opt = bound->add_option("--vectors", vectors, "Alice's Bloch vectors, 3 numbers per input");
    maximize_flag->excludes(vectors_opt);
    bound->add_option("--seed", cfg.seed, "Base seed");
    bound->add_option("--restarts", cfg.restarts, "Random restarts")->check(CLI::PositiveNumber);
    add_format(bound);

    auto *check_ei = app.add_subcommand("check-ei", "Erasure-immunity and alphabet-size checks");
    check_ei->add_option("--game", game_ref, "Built-in game name or game file")->required();
    add_format(check_ei);

    std::uint64_t table_seed = 42;
    int table_restarts = 64;
    auto *table1 = app.add_subcommand("table1", "Reproduce the full win-rate table");
    table1->add_option("--seed", table_seed, "Base seed");
    table1->add_option("--restarts", table_restarts, "Random restarts per quantum cell")->check(CLI::PositiveNumber);
    add_format(table1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }
    common.csv = format == "csv";

    try {
        RecordSet records;
        if (list->parsed()) {
            for (const auto &name : builtin_game_names()) {
                GameSpec g = builtin_game(name);
                records.add("game." + name,
                            std::to_string(g.alice_size()) + "x" + std::to_string(g.bob_size()) + " inputs");
            }
            for (const auto &info : named_strategy_list()) {
                records.add("strategy." + info.name, info.game + ": " + info.description);
            }
            return emit(records, common, out);
        }
        if (eval->parsed()) {
            GameSpec game = resolve_game(game_ref);
            Strategy s = resolve_strategy(strategy_ref, game);
            auto exact = win_rate_exact(game, s);
            double rate = win_rate(game, s);
            records.add("eval.win_rate", exact ? format_rational(*exact) : format_decimal(rate));
            records.add("eval.class", std::string(gate_class_short_name(s.claimed_class())));
            return emit(records, common, out);
        }
        if (optimize->parsed()) {
            GameSpec game = resolve_game(game_ref);
            GateClass cls = *parse_gate_class(class_name);
            SearchResult r = optimize_for_class(game, cls, cfg);
            records.add("optimize.best_rate", r.exact_rate ? format_rational(*r.exact_rate) : format_decimal(r.best_rate));
            records.add("optimize.class", class_name);
            records.add("optimize.evaluations", std::to_string(r.evaluations));
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                f << serialize_strategy(r.strategy, game.name());
                if (!f) {
                    throw std::runtime_error("cannot write " + out_path);
                }
                records.add("optimize.strategy_file", out_path);
            }
            return emit(records, common, out);
        }
        if (bound->parsed()) {
            GameSpec game = resolve_game(game_ref);
            BoundResult result;
            if (maximize) {
                result = maximize_discrimination_bound(game, cfg);
            } else if (!vectors.empty()) {
                if (vectors.size() != 3 * static_cast<size_t>(game.alice_size())) {
                    err << "ShapeMismatch: --vectors needs " << 3 * game.alice_size() << " numbers, got "
                        << vectors.size() << "\n";
                    return EXIT_USAGE;
                }
                std::vector<BlochVector> vs;
                for (size_t k = 0; k < vectors.size(); k += 3) {
                    vs.push_back({vectors[k], vectors[k + 1], vectors[k + 2]});
                }
                result = discrimination_bound({game, std::move(vs)});
            } else {
                err << "bound needs --maximize or --vectors\n";
                return EXIT_USAGE;
            }
            add_bound_records(records, result);
            return emit(records, common, out);
        }
        if (check_ei->parsed()) {
            GameSpec game = resolve_game(game_ref);
            auto report = erasure_immune_condition(game);
            for (size_t b = 0; b < report.per_bob.size(); b++) {
                records.add("ei.b." + std::to_string(b) + ".sum0", format_rational(report.per_bob[b].sum0));
                records.add("ei.b." + std::to_string(b) + ".sum1", format_rational(report.per_bob[b].sum1));
            }
            records.add("ei.condition_holds", report.condition_holds ? "true" : "false");
            records.add("ei.immune", report.condition_holds ? "false" : "true");
            records.add("ei.prop5_applies", prop5_applies(game) ? "true" : "false");
            return emit(records, common, out);
        }
        if (table1->parsed()) {
            auto cells = compute_table1(table_seed, table_restarts);
            bool ok = true;
            for (const auto &cell : cells) {
                records.add("table1." + cell.game + "." + std::string(gate_class_short_name(cell.gate_class)),
                            cell.value);
                if (!cell.within_tolerance) {
                    ok = false;
                    err << "tolerance violated: " << cell.game << " " << gate_class_short_name(cell.gate_class)
                        << " = " << cell.value << ", expected " << cell.expectation << "\n";
                }
            }
            records.add("table1.status", ok ? "pass" : "fail");
            emit(records, common, out);
            return ok ? EXIT_OK : EXIT_TOLERANCE_VIOLATION;
        }
    } catch (const Error &e) {
        err << e.kind() << ": " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}

}  // namespace ssg

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

#ifndef SSG_CLI_H
#define SSG_CLI_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/gates.h"

namespace ssg {

/// Process exit codes of the command-line tool.
inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_TOLERANCE_VIOLATION = 1;
inline constexpr int EXIT_USAGE = 2;

/// Decimal with 12 significant digits.
std::string format_decimal(double v);

/// Output of one command: unique dotted keys, emitted sorted.
class RecordSet {
   public:
    /// Throws std::logic_error on a duplicate key.
    void add(const std::string &key, const std::string &value);
    const std::map<std::string, std::string> &records() const {
        return records_;
    }
    /// "key = value" lines, or "key,value" rows when csv is set.
    std::string render(bool csv) const;

   private:
    std::map<std::string, std::string> records_;
};

/// One cell of the win-rate table: a built-in game under one gate class.
struct Table1Cell {
    std::string game;
    GateClass gate_class;
    /// Exact rational for classical classes, 12-digit decimal otherwise;
    /// prefixed with "unverified: " when no reference value exists.
    std::string value;
    double numeric;
    bool verified;
    bool within_tolerance;
    /// Human-readable acceptance window, e.g. ">= 0.853453390593".
    std::string expectation;
};

/// Computes all 16 cells (15 with reference values) in row-major order:
/// classes cr, ci, qr, qi by games chsh_star, ei_chsh_star, game32, b32.
std::vector<Table1Cell> compute_table1(std::uint64_t seed, int restarts);

/// Entry point shared by the ssg binary and the tests. args excludes the
/// program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ssg

#endif

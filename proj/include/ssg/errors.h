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

#ifndef SSG_ERRORS_H
#define SSG_ERRORS_H

#include <stdexcept>
#include <string>

namespace ssg {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    /// Short machine-readable tag, e.g. "ShapeMismatch".
    virtual const char *kind() const noexcept = 0;
};

#define SSG_DEFINE_ERROR(Name)                          \
    struct Name final : Error {                         \
        using Error::Error;                             \
        const char *kind() const noexcept override {    \
            return #Name;                               \
        }                                               \
    }

SSG_DEFINE_ERROR(NotHermitian);
SSG_DEFINE_ERROR(OutsideBlochBall);
SSG_DEFINE_ERROR(InvalidState);
SSG_DEFINE_ERROR(ProbabilityOutOfRange);
SSG_DEFINE_ERROR(InvalidGate);
SSG_DEFINE_ERROR(ShapeMismatch);
SSG_DEFINE_ERROR(UnknownGame);
SSG_DEFINE_ERROR(UnknownStrategy);
SSG_DEFINE_ERROR(ValidationError);
SSG_DEFINE_ERROR(NotReversible);
SSG_DEFINE_ERROR(SearchSpaceTooLarge);
SSG_DEFINE_ERROR(BadPriors);
SSG_DEFINE_ERROR(PreconditionViolated);

#undef SSG_DEFINE_ERROR

/// Malformed game or strategy text. Carries the 1-based line number.
struct ParseError final : Error {
    ParseError(int line, const std::string &reason)
        : Error("line " + std::to_string(line) + ": " + reason), line(line) {
    }
    const char *kind() const noexcept override {
        return "ParseError";
    }
    int line;
};

}  // namespace ssg

#endif

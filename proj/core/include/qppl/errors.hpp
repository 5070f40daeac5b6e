// Copyright 2026 The QPPL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

#include "qppl/syntax.hpp"

namespace qppl {

/// Malformed source text. `code` is one of SYNTAX_ERROR, INDENTATION_ERROR,
/// TAB_INDENT, UNKNOWN_IDENTIFIER.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string code, SourceLoc loc, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), loc_(loc) {}

    const std::string& code() const noexcept { return code_; }
    SourceLoc loc() const noexcept { return loc_; }

private:
    std::string code_;
    SourceLoc loc_;
};

/// The program needs more live bits than the dense representation allows.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition that validation should have ruled out was violated at run
/// time (unknown variable, statement not allowed in the current mode).
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qppl

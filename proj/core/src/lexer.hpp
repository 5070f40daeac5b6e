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

#include <string>
#include <string_view>
#include <vector>

#include "qppl/syntax.hpp"

namespace qppl::detail {

enum class Tok {
    Ident,
    Bit,       // 0 or 1
    LParen,
    RParen,
    Comma,
    Colon,
    Walrus,    // :=
    XorEq,     // ^=
    Caret,     // ^
    EqEq,
    NotEq,
    Not,       // not, ¬, !
    And,       // and, ∧
    Or,        // or, ∨
    Arrow,     // -> (only to report a helpful error)
    Newline,
    Indent,
    Dedent,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

/// Splits source into tokens with Python-style INDENT/DEDENT markers.
/// Blank and comment-only lines produce no tokens.
std::vector<Token> tokenize(std::string_view text);

std::string describe(Tok kind);

} // namespace qppl::detail

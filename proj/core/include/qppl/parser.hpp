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

#include <string_view>

#include "qppl/errors.hpp"
#include "qppl/syntax.hpp"

namespace qppl {

/// Parses a `.qppl` source file.
///
/// The concrete syntax is indentation-structured:
///
///     def main(x, y : bit):
///       qrand_bit(x)
///       if x == 1:
///         qnegate()
///       new z := not x
///       return x, z
///
/// Sugar is removed while parsing: `==`, `!=` and `^` become `not`/`and`/`or`
/// combinations, and `new y := E` becomes `new y` followed by `y ^= E`.
/// Both `qrand_bit`/`qrand` and `qnegate`/`qneg` are accepted.
///
/// Throws ParseError carrying the line and column of the first problem.
Program parse(std::string_view text);

/// Parses a single expression (used by tests and the pretty-printer checks).
Expr parse_expression(std::string_view text);

} // namespace qppl

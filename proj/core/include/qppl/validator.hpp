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

namespace qppl {

/// Which statement set a program is checked against.
enum class Mode { Quantum, Classical };

enum class Severity { Error, Warning };

/// Diagnostic codes. Errors unless noted.
namespace diag {
inline constexpr std::string_view kXorSelfReference = "XOR_SELF_REFERENCE";
inline constexpr std::string_view kCondAssignsConditionVar = "COND_ASSIGNS_CONDITION_VAR";
inline constexpr std::string_view kUndeclaredVariable = "UNDECLARED_VARIABLE";
inline constexpr std::string_view kRedeclaredVariable = "REDECLARED_VARIABLE";
inline constexpr std::string_view kDuplicateMeasure = "DUPLICATE_MEASURE";
inline constexpr std::string_view kDuplicateReturn = "DUPLICATE_RETURN";
inline constexpr std::string_view kQuantumInClassical = "QUANTUM_STATEMENT_IN_CLASSICAL_MODE";
inline constexpr std::string_view kClassicalInQuantum = "CLASSICAL_STATEMENT_IN_QUANTUM_MODE";
inline constexpr std::string_view kUnusedVariable = "UNUSED_VARIABLE"; // warning
} // namespace diag

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceLoc loc;
};

/// Checks the reversibility side conditions and scoping rules.
///
/// In quantum mode a program is accepted iff every `x ^= E` has x not free in
/// E, every `if E:` body leaves the variables of E unassigned, every variable
/// is declared once before use, and `measure`/`return` name distinct declared
/// variables. Classical mode drops the two reversibility conditions and
/// swaps which statement forms are permitted.
///
/// Returns diagnostics in source order; an empty result (or warnings only)
/// means the program may be run.
std::vector<Diagnostic> validate(const Program& p, Mode mode = Mode::Quantum);

bool has_errors(const std::vector<Diagnostic>& diags);

/// `file:line:col: severity[code]: message`
std::string render(const Diagnostic& d, std::string_view file);

} // namespace qppl

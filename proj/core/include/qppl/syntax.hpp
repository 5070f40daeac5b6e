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

#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qppl {

/// 1-based line/column into the source text. A zero line means "synthesized".
struct SourceLoc {
    int line = 0;
    int column = 0;
};

/// Boolean expression over program variables.
///
/// Only the core constructors exist here; the parser desugars `==`, `!=` and
/// `^` into combinations of these.
struct Expr {
    enum class Kind { Var, Const, Not, And, Or };

    Kind kind = Kind::Const;
    std::string name;           // Var only
    bool value = false;         // Const only
    std::vector<Expr> operands; // 1 for Not, 2 for And/Or

    static Expr var(std::string name);
    static Expr constant(bool value);
    static Expr negate(Expr e);
    static Expr conj(Expr lhs, Expr rhs);
    static Expr disj(Expr lhs, Expr rhs);

    friend bool operator==(const Expr&, const Expr&) = default;
};

struct CompStmt;

struct IfStmt {
    Expr cond;
    std::vector<CompStmt> body;
};

/// `target ^= rhs`
struct XorAssign {
    std::string target;
    Expr rhs;
};

/// `qrand(target)`: Hadamard on the target bit.
struct QRand {
    std::string target;
};

/// `qneg()`: multiply every amplitude by -1.
struct QNeg {};

/// Classical-mode `target := rhs`.
struct Assign {
    std::string target;
    Expr rhs;
};

/// Classical-mode `target := rand_bit()`.
struct RandAssign {
    std::string target;
};

/// Statements allowed inside `if` bodies.
struct CompStmt {
    std::variant<IfStmt, XorAssign, QRand, QNeg, Assign, RandAssign> node;
    SourceLoc loc;
};

struct NewStmt {
    std::vector<std::string> names;
};

struct MeasureStmt {
    std::vector<std::string> names;
};

/// Top-level statement. `new` and `measure` cannot occur inside `if`.
struct Stmt {
    std::variant<NewStmt, MeasureStmt, CompStmt> node;
    SourceLoc loc;
    /// Source line as written (for traces); empty for constructed or desugared statements.
    std::string text;
};

/// Trace label: the original source line when known, else the printed form.
std::string statement_label(const Stmt& s);

struct Program {
    std::vector<std::string> inputs;
    std::vector<Stmt> body;
    /// Absent means every live variable is returned as quantum data.
    std::optional<std::vector<std::string>> returns;
    SourceLoc loc;
    SourceLoc return_loc;
};

// Structural equality, ignoring source locations.
bool operator==(const CompStmt& a, const CompStmt& b);
bool operator==(const Stmt& a, const Stmt& b);
bool operator==(const Program& a, const Program& b);
bool operator==(const IfStmt& a, const IfStmt& b);
bool operator==(const XorAssign& a, const XorAssign& b);
bool operator==(const QRand& a, const QRand& b);
bool operator==(const QNeg& a, const QNeg& b);
bool operator==(const Assign& a, const Assign& b);
bool operator==(const RandAssign& a, const RandAssign& b);
bool operator==(const NewStmt& a, const NewStmt& b);
bool operator==(const MeasureStmt& a, const MeasureStmt& b);

// Convenience constructors used by tests and the random program generator.
CompStmt make_if(Expr cond, std::vector<CompStmt> body);
CompStmt make_xor(std::string target, Expr rhs);
CompStmt make_qrand(std::string target);
CompStmt make_qneg();
CompStmt make_assign(std::string target, Expr rhs);
CompStmt make_rand_assign(std::string target);
Stmt make_new(std::vector<std::string> names);
Stmt make_measure(std::vector<std::string> names);
Stmt make_stmt(CompStmt c);

using NameSet = std::set<std::string>;

/// Variables occurring in `e`.
NameSet free_vars(const Expr& e);

/// Variables assigned to by `cs`: targets of `^=`, `:=`, `qrand` and
/// `rand_bit`, including those nested in `if` bodies. `qneg` assigns nothing.
NameSet assigned_vars(std::span<const CompStmt> cs);
NameSet assigned_vars(const CompStmt& c);

/// Source text for an expression, parenthesized by precedence so that
/// parsing the result gives back the same tree.
std::string to_source(const Expr& e);
/// Single-line rendering of a statement header (`if` renders as `if E:`).
std::string to_source_line(const CompStmt& c);
std::string to_source_line(const Stmt& s);
/// Full program text in the concrete syntax accepted by `parse`.
std::string to_source(const Program& p);

} // namespace qppl

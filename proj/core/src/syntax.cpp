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

#include "qppl/syntax.hpp"

#include <sstream>

namespace qppl {

Expr Expr::var(std::string name) {
    Expr e;
    e.kind = Kind::Var;
    e.name = std::move(name);
    return e;
}

Expr Expr::constant(bool value) {
    Expr e;
    e.kind = Kind::Const;
    e.value = value;
    return e;
}

Expr Expr::negate(Expr inner) {
    Expr e;
    e.kind = Kind::Not;
    e.operands.push_back(std::move(inner));
    return e;
}

Expr Expr::conj(Expr lhs, Expr rhs) {
    Expr e;
    e.kind = Kind::And;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
}

Expr Expr::disj(Expr lhs, Expr rhs) {
    Expr e;
    e.kind = Kind::Or;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
}

bool operator==(const IfStmt& a, const IfStmt& b) { return a.cond == b.cond && a.body == b.body; }
bool operator==(const XorAssign& a, const XorAssign& b) { return a.target == b.target && a.rhs == b.rhs; }
bool operator==(const QRand& a, const QRand& b) { return a.target == b.target; }
bool operator==(const QNeg&, const QNeg&) { return true; }
bool operator==(const Assign& a, const Assign& b) { return a.target == b.target && a.rhs == b.rhs; }
bool operator==(const RandAssign& a, const RandAssign& b) { return a.target == b.target; }
bool operator==(const NewStmt& a, const NewStmt& b) { return a.names == b.names; }
bool operator==(const MeasureStmt& a, const MeasureStmt& b) { return a.names == b.names; }
bool operator==(const CompStmt& a, const CompStmt& b) { return a.node == b.node; }
bool operator==(const Stmt& a, const Stmt& b) { return a.node == b.node; }

bool operator==(const Program& a, const Program& b) {
    return a.inputs == b.inputs && a.body == b.body && a.returns == b.returns;
}

CompStmt make_if(Expr cond, std::vector<CompStmt> body) {
    return CompStmt{IfStmt{std::move(cond), std::move(body)}, {}};
}
CompStmt make_xor(std::string target, Expr rhs) {
    return CompStmt{XorAssign{std::move(target), std::move(rhs)}, {}};
}
CompStmt make_qrand(std::string target) { return CompStmt{QRand{std::move(target)}, {}}; }
CompStmt make_qneg() { return CompStmt{QNeg{}, {}}; }
CompStmt make_assign(std::string target, Expr rhs) {
    return CompStmt{Assign{std::move(target), std::move(rhs)}, {}};
}
CompStmt make_rand_assign(std::string target) { return CompStmt{RandAssign{std::move(target)}, {}}; }
Stmt make_new(std::vector<std::string> names) { return Stmt{NewStmt{std::move(names)}, {}, {}}; }
Stmt make_measure(std::vector<std::string> names) { return Stmt{MeasureStmt{std::move(names)}, {}, {}}; }
Stmt make_stmt(CompStmt c) {
    SourceLoc loc = c.loc;
    return Stmt{std::move(c), loc, {}};
}

namespace {

void collect_free(const Expr& e, NameSet& out) {
    if (e.kind == Expr::Kind::Var) {
        out.insert(e.name);
        return;
    }
    for (const Expr& op : e.operands) collect_free(op, out);
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void collect_assigned(const CompStmt& c, NameSet& out) {
    std::visit(overloaded{
                   [&](const IfStmt& s) {
                       for (const CompStmt& b : s.body) collect_assigned(b, out);
                   },
                   [&](const XorAssign& s) { out.insert(s.target); },
                   [&](const QRand& s) { out.insert(s.target); },
                   [&](const QNeg&) {},
                   [&](const Assign& s) { out.insert(s.target); },
                   [&](const RandAssign& s) { out.insert(s.target); },
               },
               c.node);
}

// Binding strength in the concrete grammar; larger binds tighter.
int precedence(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Or: return 1;
    case Expr::Kind::And: return 2;
    case Expr::Kind::Not: return 3;
    default: return 4;
    }
}

void write_expr(std::ostream& os, const Expr& e, int context) {
    const bool parens = precedence(e) < context;
    if (parens) os << '(';
    switch (e.kind) {
    case Expr::Kind::Var: os << e.name; break;
    case Expr::Kind::Const: os << (e.value ? '1' : '0'); break;
    case Expr::Kind::Not:
        os << "not ";
        write_expr(os, e.operands[0], 3);
        break;
    case Expr::Kind::And:
        // Left-associative: the right operand needs parens at equal strength.
        write_expr(os, e.operands[0], 2);
        os << " and ";
        write_expr(os, e.operands[1], 3);
        break;
    case Expr::Kind::Or:
        write_expr(os, e.operands[0], 1);
        os << " or ";
        write_expr(os, e.operands[1], 2);
        break;
    }
    if (parens) os << ')';
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out;
}

void write_comp(std::ostream& os, const CompStmt& c, int indent) {
    os << std::string(static_cast<size_t>(indent), ' ') << to_source_line(c) << '\n';
    if (const auto* s = std::get_if<IfStmt>(&c.node)) {
        for (const CompStmt& b : s->body) write_comp(os, b, indent + 2);
    }
}

} // namespace

NameSet free_vars(const Expr& e) {
    NameSet out;
    collect_free(e, out);
    return out;
}

NameSet assigned_vars(std::span<const CompStmt> cs) {
    NameSet out;
    for (const CompStmt& c : cs) collect_assigned(c, out);
    return out;
}

NameSet assigned_vars(const CompStmt& c) {
    NameSet out;
    collect_assigned(c, out);
    return out;
}

std::string to_source(const Expr& e) {
    std::ostringstream os;
    write_expr(os, e, 0);
    return os.str();
}

std::string to_source_line(const CompStmt& c) {
    return std::visit(overloaded{
                          [](const IfStmt& s) { return "if " + to_source(s.cond) + ":"; },
                          [](const XorAssign& s) { return s.target + " ^= " + to_source(s.rhs); },
                          [](const QRand& s) { return "qrand(" + s.target + ")"; },
                          [](const QNeg&) { return std::string("qneg()"); },
                          [](const Assign& s) { return s.target + " := " + to_source(s.rhs); },
                          [](const RandAssign& s) { return s.target + " := rand_bit()"; },
                      },
                      c.node);
}

std::string statement_label(const Stmt& s) { return s.text.empty() ? to_source_line(s) : s.text; }

std::string to_source_line(const Stmt& s) {
    return std::visit(overloaded{
                          [](const NewStmt& n) { return "new " + join(n.names); },
                          [](const MeasureStmt& m) { return "measure(" + join(m.names) + ")"; },
                          [](const CompStmt& c) { return to_source_line(c); },
                      },
                      s.node);
}

std::string to_source(const Program& p) {
    std::ostringstream os;
    os << "def main(" << join(p.inputs) << (p.inputs.empty() ? "" : " : bit") << "):\n";
    for (const Stmt& s : p.body) {
        if (const auto* c = std::get_if<CompStmt>(&s.node)) {
            write_comp(os, *c, 2);
        } else {
            os << "  " << to_source_line(s) << '\n';
        }
    }
    if (p.returns) {
        os << "  return";
        if (!p.returns->empty()) os << ' ' << join(*p.returns);
        os << '\n';
    }
    return os.str();
}

} // namespace qppl

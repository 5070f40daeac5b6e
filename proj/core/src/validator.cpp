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

#include "qppl/validator.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace qppl {
namespace {

std::string quoted_list(const NameSet& names) {
    std::string out;
    for (const std::string& n : names) {
        if (!out.empty()) out += ", ";
        out += "'" + n + "'";
    }
    return out;
}

class Checker {
public:
    explicit Checker(Mode mode) : mode_(mode) {}

    std::vector<Diagnostic> run(const Program& p) {
        for (const std::string& in : p.inputs) declare(in, p.loc, /*from_new=*/false);
        for (const Stmt& s : p.body) statement(s);

        if (p.returns) {
            NameSet seen;
            for (const std::string& r : *p.returns) {
                if (!seen.insert(r).second) {
                    error(diag::kDuplicateReturn, p.return_loc, "'" + r + "' is returned more than once");
                }
                read(r, p.return_loc, "return");
            }
        } else {
            // Everything live is returned implicitly.
            for (auto& [name, info] : vars_) info.used = true;
        }

        for (const auto& [name, info] : vars_) {
            if (info.from_new && !info.used) {
                diags_.push_back({Severity::Warning, std::string(diag::kUnusedVariable),
                                  "'" + name + "' is allocated but never read, measured or returned", info.loc});
            }
        }
        std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic& a, const Diagnostic& b) {
            return std::tie(a.loc.line, a.loc.column) < std::tie(b.loc.line, b.loc.column);
        });
        return std::move(diags_);
    }

private:
    struct VarInfo {
        SourceLoc loc;
        bool from_new = false;
        bool used = false;
    };

    void error(std::string_view code, SourceLoc loc, std::string message) {
        diags_.push_back({Severity::Error, std::string(code), std::move(message), loc});
    }

    void declare(const std::string& name, SourceLoc loc, bool from_new) {
        if (vars_.count(name)) {
            error(diag::kRedeclaredVariable, loc, "'" + name + "' is already declared");
            return;
        }
        vars_[name] = VarInfo{loc, from_new, false};
    }

    bool require_declared(const std::string& name, SourceLoc loc, std::string_view where) {
        if (vars_.count(name)) return true;
        error(diag::kUndeclaredVariable, loc,
              "use of undeclared variable '" + name + "' in " + std::string(where));
        return false;
    }

    void read(const std::string& name, SourceLoc loc, std::string_view where) {
        if (require_declared(name, loc, where)) vars_[name].used = true;
    }

    void read_expr(const Expr& e, SourceLoc loc, std::string_view where) {
        for (const std::string& v : free_vars(e)) read(v, loc, where);
    }

    void statement(const Stmt& s) {
        if (const auto* n = std::get_if<NewStmt>(&s.node)) {
            for (const std::string& name : n->names) declare(name, s.loc, /*from_new=*/true);
        } else if (const auto* m = std::get_if<MeasureStmt>(&s.node)) {
            if (mode_ == Mode::Classical) {
                error(diag::kQuantumInClassical, s.loc, "'measure' is not available in classical mode");
            }
            NameSet seen;
            for (const std::string& name : m->names) {
                if (!seen.insert(name).second) {
                    error(diag::kDuplicateMeasure, s.loc, "'" + name + "' is measured more than once");
                }
                read(name, s.loc, "measure");
            }
        } else {
            comp(std::get<CompStmt>(s.node));
        }
    }

    void comp(const CompStmt& c) {
        const bool quantum = mode_ == Mode::Quantum;
        if (const auto* s = std::get_if<IfStmt>(&c.node)) {
            read_expr(s->cond, c.loc, "condition");
            if (quantum) {
                NameSet clash;
                const NameSet assigned = assigned_vars(s->body);
                for (const std::string& v : free_vars(s->cond)) {
                    if (assigned.count(v)) clash.insert(v);
                }
                if (!clash.empty()) {
                    error(diag::kCondAssignsConditionVar, c.loc,
                          "body of 'if' assigns " + quoted_list(clash) +
                              ", which the condition reads; the branch could not be undone");
                }
            }
            for (const CompStmt& b : s->body) comp(b);
        } else if (const auto* s = std::get_if<XorAssign>(&c.node)) {
            require_declared(s->target, c.loc, "assignment");
            read_expr(s->rhs, c.loc, "expression");
            if (quantum && free_vars(s->rhs).count(s->target)) {
                error(diag::kXorSelfReference, c.loc,
                      "'" + s->target + "' appears on both sides of '^='; the update could not be undone");
            }
        } else if (const auto* s = std::get_if<QRand>(&c.node)) {
            if (!quantum) error(diag::kQuantumInClassical, c.loc, "'qrand' is not available in classical mode");
            read(s->target, c.loc, "qrand");
        } else if (std::holds_alternative<QNeg>(c.node)) {
            if (!quantum) error(diag::kQuantumInClassical, c.loc, "'qneg' is not available in classical mode");
        } else if (const auto* s = std::get_if<Assign>(&c.node)) {
            if (quantum) {
                error(diag::kClassicalInQuantum, c.loc,
                      "':=' overwrites '" + s->target + "' irreversibly; use '^=' in quantum mode");
            }
            require_declared(s->target, c.loc, "assignment");
            read_expr(s->rhs, c.loc, "expression");
        } else if (const auto* s = std::get_if<RandAssign>(&c.node)) {
            if (quantum) {
                error(diag::kClassicalInQuantum, c.loc, "'rand_bit()' is classical; use 'qrand' in quantum mode");
            }
            require_declared(s->target, c.loc, "assignment");
        }
    }

    Mode mode_;
    std::map<std::string, VarInfo> vars_;
    std::vector<Diagnostic> diags_;
};

} // namespace

std::vector<Diagnostic> validate(const Program& p, Mode mode) { return Checker(mode).run(p); }

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string render(const Diagnostic& d, std::string_view file) {
    std::ostringstream os;
    os << file << ':' << d.loc.line << ':' << d.loc.column << ": "
       << (d.severity == Severity::Error ? "error" : "warning") << '[' << d.code << "]: " << d.message;
    return os.str();
}

} // namespace qppl

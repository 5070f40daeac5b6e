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

#include "qppl/engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qppl/errors.hpp"
#include "qppl/validator.hpp"

namespace qppl {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Expression with variables resolved to bit masks.
struct BoundExpr {
    Expr::Kind kind = Expr::Kind::Const;
    BasisIndex mask = 0;
    bool value = false;
    std::vector<BoundExpr> operands;

    bool eval(BasisIndex world) const {
        switch (kind) {
        case Expr::Kind::Var: return (world & mask) != 0;
        case Expr::Kind::Const: return value;
        case Expr::Kind::Not: return !operands[0].eval(world);
        case Expr::Kind::And: return operands[0].eval(world) && operands[1].eval(world);
        case Expr::Kind::Or: return operands[0].eval(world) || operands[1].eval(world);
        }
        return false;
    }
};

BoundExpr bind(const Expr& e, const Environment& env) {
    BoundExpr b;
    b.kind = e.kind;
    if (e.kind == Expr::Kind::Var) b.mask = env.mask(e.name);
    b.value = e.value;
    for (const Expr& op : e.operands) b.operands.push_back(bind(op, env));
    return b;
}

// Conditions of the enclosing `if` statements; a world is active when all hold.
struct Guards {
    std::vector<BoundExpr> conds;

    bool active(BasisIndex world) const {
        for (const BoundExpr& c : conds) {
            if (!c.eval(world)) return false;
        }
        return true;
    }
};

// Index of the i-th world whose `bit` is clear.
inline BasisIndex insert_zero(BasisIndex i, BasisIndex bit) {
    const BasisIndex low = i & (bit - 1);
    return ((i - low) << 1) | low;
}

void require_target_not_free(std::string_view target, const Expr& rhs) {
    if (free_vars(rhs).count(std::string(target))) {
        throw SemanticError("'" + std::string(target) + "' occurs on both sides of '^='");
    }
}

void require_condition_preserved(const Expr& cond, std::span<const CompStmt> body) {
    const NameSet assigned = assigned_vars(body);
    for (const std::string& v : free_vars(cond)) {
        if (assigned.count(v)) throw SemanticError("'if' body assigns condition variable '" + v + "'");
    }
}

void apply_body(std::vector<double>& amps, std::span<const CompStmt> body, const Environment& env, Guards& guards);

void apply_one(std::vector<double>& amps, const CompStmt& c, const Environment& env, Guards& guards) {
    const std::size_t dim = amps.size();
    if (const auto* s = std::get_if<IfStmt>(&c.node)) {
        require_condition_preserved(s->cond, s->body);
        guards.conds.push_back(bind(s->cond, env));
        apply_body(amps, s->body, env, guards);
        guards.conds.pop_back();
    } else if (const auto* s = std::get_if<QRand>(&c.node)) {
        const BasisIndex bit = env.mask(s->target);
        for (BasisIndex i = 0; i < dim / 2; ++i) {
            const BasisIndex lo = insert_zero(i, bit);
            if (!guards.active(lo)) continue;
            const BasisIndex hi = lo | bit;
            const double a = amps[lo];
            const double b = amps[hi];
            amps[lo] = (a + b) * kInvSqrt2;
            amps[hi] = (a - b) * kInvSqrt2;
        }
    } else if (std::holds_alternative<QNeg>(c.node)) {
        for (BasisIndex i = 0; i < dim; ++i) {
            if (guards.active(i)) amps[i] = -amps[i];
        }
    } else if (const auto* s = std::get_if<XorAssign>(&c.node)) {
        require_target_not_free(s->target, s->rhs);
        const BasisIndex bit = env.mask(s->target);
        const BoundExpr rhs = bind(s->rhs, env);
        for (BasisIndex i = 0; i < dim / 2; ++i) {
            const BasisIndex lo = insert_zero(i, bit);
            if (guards.active(lo) && rhs.eval(lo)) std::swap(amps[lo], amps[lo | bit]);
        }
    } else {
        throw SemanticError("'" + to_source_line(c) + "' is a classical statement; run it in classical mode");
    }
}

void apply_body(std::vector<double>& amps, std::span<const CompStmt> body, const Environment& env, Guards& guards) {
    for (const CompStmt& c : body) apply_one(amps, c, env, guards);
}

TwoLayerState apply_to_branches(TwoLayerState s, std::span<const CompStmt> body) {
    for (Branch& b : s.branches) {
        Guards guards;
        apply_body(b.state.amps, body, s.env, guards);
    }
    return s;
}

BasisIndex measured_mask(const Environment& env, std::span<const std::string> vars) {
    BasisIndex m = 0;
    for (const std::string& v : vars) {
        const BasisIndex bit = env.mask(v);
        if (m & bit) throw SemanticError("'" + v + "' is measured more than once");
        m |= bit;
    }
    return m;
}

// Packs the bits of `world` selected by `mask` into the low bits, keeping order.
BasisIndex compress(BasisIndex world, BasisIndex mask) {
    BasisIndex out = 0;
    int shift = 0;
    for (BasisIndex bit = 1; bit != 0 && bit <= mask; bit <<= 1) {
        if (mask & bit) {
            if (world & bit) out |= BasisIndex{1} << shift;
            ++shift;
        }
    }
    return out;
}

} // namespace

bool eval_expr(const Expr& e, BasisIndex basis, const Environment& env) {
    switch (e.kind) {
    case Expr::Kind::Var: return (basis & env.mask(e.name)) != 0;
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Not: return !eval_expr(e.operands.at(0), basis, env);
    case Expr::Kind::And: return eval_expr(e.operands.at(0), basis, env) && eval_expr(e.operands.at(1), basis, env);
    case Expr::Kind::Or: return eval_expr(e.operands.at(0), basis, env) || eval_expr(e.operands.at(1), basis, env);
    }
    return false;
}

TwoLayerState apply_qrand(TwoLayerState s, std::string_view target) {
    const CompStmt c = make_qrand(std::string(target));
    return apply_to_branches(std::move(s), {&c, 1});
}

TwoLayerState apply_qneg(TwoLayerState s) {
    const CompStmt c = make_qneg();
    return apply_to_branches(std::move(s), {&c, 1});
}

TwoLayerState apply_xor_assign(TwoLayerState s, std::string_view target, const Expr& rhs) {
    const CompStmt c = make_xor(std::string(target), rhs);
    return apply_to_branches(std::move(s), {&c, 1});
}

TwoLayerState apply_if(TwoLayerState s, const Expr& cond, std::span<const CompStmt> body) {
    const CompStmt c = make_if(cond, {body.begin(), body.end()});
    return apply_to_branches(std::move(s), {&c, 1});
}

TwoLayerState apply_comp(TwoLayerState s, const CompStmt& c) { return apply_to_branches(std::move(s), {&c, 1}); }

TwoLayerState apply_measure(TwoLayerState s, std::span<const std::string> vars) {
    const BasisIndex mask = measured_mask(s.env, vars);
    const std::size_t outcomes = std::size_t{1} << vars.size();
    std::vector<Branch> next;
    std::vector<double> weight(outcomes);
    std::vector<std::size_t> child_of(outcomes);
    constexpr std::size_t kPruned = static_cast<std::size_t>(-1);
    for (Branch& b : s.branches) {
        std::fill(weight.begin(), weight.end(), 0.0);
        for (BasisIndex k = 0; k < b.state.amps.size(); ++k) {
            const double q = b.state.amps[k];
            weight[compress(k, mask)] += q * q;
        }
        for (BasisIndex y = 0; y < outcomes; ++y) {
            const double p = b.p * weight[y];
            if (p <= kPruneThreshold) {
                child_of[y] = kPruned;
                continue;
            }
            child_of[y] = next.size();
            weight[y] = std::sqrt(weight[y]); // now Q
            next.push_back({p, AmplitudeState{std::vector<double>(b.state.amps.size(), 0.0)}});
        }
        for (BasisIndex k = 0; k < b.state.amps.size(); ++k) {
            const BasisIndex y = compress(k, mask);
            if (child_of[y] == kPruned) continue;
            next[child_of[y]].state.amps[k] = b.state.amps[k] / weight[y];
        }
    }
    double total = 0.0;
    for (const Branch& b : next) total += b.p;
    for (Branch& b : next) b.p /= total;
    s.branches = std::move(next);
    return s;
}

TwoLayerState apply_new(TwoLayerState s, std::span<const std::string> names) {
    for (const std::string& n : names) {
        if (s.env.contains(n)) throw SemanticError("'" + n + "' is already live");
    }
    return extend(std::move(s), names);
}

TwoLayerState apply_return(TwoLayerState s, std::span<const std::string> returns) {
    std::vector<std::string> kept;
    std::vector<std::string> discarded;
    BasisIndex keep_mask = 0;
    for (const std::string& r : returns) keep_mask |= s.env.mask(r);
    for (const std::string& name : s.env.names()) {
        ((keep_mask & s.env.mask(name)) ? kept : discarded).push_back(name);
    }
    if (discarded.empty()) return s;

    s = apply_measure(std::move(s), discarded);
    // Every branch now has one definite value on the discarded bits, so
    // dropping them loses no amplitude.
    Environment reduced(kept);
    for (Branch& b : s.branches) {
        std::vector<double> amps(reduced.dimension(), 0.0);
        for (BasisIndex k = 0; k < b.state.amps.size(); ++k) amps[compress(k, keep_mask)] += b.state.amps[k];
        b.state.amps = std::move(amps);
    }
    s.env = std::move(reduced);
    return s;
}

TwoLayerState apply_statement(TwoLayerState s, const Stmt& stmt) {
    if (const auto* n = std::get_if<NewStmt>(&stmt.node)) return apply_new(std::move(s), n->names);
    if (const auto* m = std::get_if<MeasureStmt>(&stmt.node)) return apply_measure(std::move(s), m->names);
    return apply_comp(std::move(s), std::get<CompStmt>(stmt.node));
}

TwoLayerState run(const Program& p, const RunOptions& options) {
    for (const Diagnostic& d : validate(p, Mode::Quantum)) {
        if (d.severity == Severity::Error) {
            throw SemanticError(std::to_string(d.loc.line) + ":" + std::to_string(d.loc.column) + ": " + d.message);
        }
    }
    auto step = [&](std::string_view label, const TwoLayerState& s) {
        if (options.check_invariants && !s.is_valid()) {
            throw std::logic_error("state invariant violated after '" + std::string(label) +
                                   "' (error " + std::to_string(s.invariant_error()) + ")");
        }
        if (options.on_step) options.on_step(label, s);
    };

    TwoLayerState s = initial_state(p.inputs);
    {
        std::string header = "def main(";
        for (size_t i = 0; i < p.inputs.size(); ++i) header += (i ? ", " : "") + p.inputs[i];
        step(header + (p.inputs.empty() ? "):" : " : bit):"), s);
    }
    for (const Stmt& stmt : p.body) {
        s = apply_statement(std::move(s), stmt);
        step(statement_label(stmt), s);
    }
    if (p.returns) {
        s = apply_return(std::move(s), *p.returns);
        std::string label = "return";
        for (size_t i = 0; i < p.returns->size(); ++i) label += (i ? ", " : " ") + (*p.returns)[i];
        step(label, s);
    }
    return s;
}

Eigen::MatrixXd comp_matrix(std::span<const CompStmt> body, const Environment& env) {
    check_capacity(env.size(), kMaxMatrixBits);
    const std::size_t dim = env.dimension();
    Eigen::MatrixXd u(dim, dim);
    for (BasisIndex k = 0; k < dim; ++k) {
        std::vector<double> column(dim, 0.0);
        column[k] = 1.0;
        Guards guards;
        apply_body(column, body, env, guards);
        for (BasisIndex r = 0; r < dim; ++r) u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = column[r];
    }
    return u;
}

} // namespace qppl

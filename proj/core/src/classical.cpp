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

#include "qppl/classical.hpp"

#include <algorithm>

#include "qppl/engine.hpp"
#include "qppl/errors.hpp"
#include "qppl/validator.hpp"

namespace qppl {
namespace {

// Moves the mass of every world k to successor(k).
template <class Successor>
void push_forward(std::vector<double>& probs, Successor successor) {
    std::vector<double> next(probs.size(), 0.0);
    for (BasisIndex k = 0; k < probs.size(); ++k) {
        if (probs[k] != 0.0) next[successor(k)] += probs[k];
    }
    probs = std::move(next);
}

void apply_in_place(std::vector<double>& probs, const CompStmt& c, const Environment& env) {
    if (const auto* s = std::get_if<IfStmt>(&c.node)) {
        std::vector<double> taken(probs.size(), 0.0);
        for (BasisIndex k = 0; k < probs.size(); ++k) {
            if (probs[k] != 0.0 && eval_expr(s->cond, k, env)) {
                taken[k] = probs[k];
                probs[k] = 0.0;
            }
        }
        for (const CompStmt& b : s->body) apply_in_place(taken, b, env);
        for (BasisIndex k = 0; k < probs.size(); ++k) probs[k] += taken[k];
    } else if (const auto* s = std::get_if<Assign>(&c.node)) {
        const BasisIndex bit = env.mask(s->target);
        push_forward(probs, [&](BasisIndex k) { return eval_expr(s->rhs, k, env) ? (k | bit) : (k & ~bit); });
    } else if (const auto* s = std::get_if<XorAssign>(&c.node)) {
        const BasisIndex bit = env.mask(s->target);
        push_forward(probs, [&](BasisIndex k) { return eval_expr(s->rhs, k, env) ? (k ^ bit) : k; });
    } else if (const auto* s = std::get_if<RandAssign>(&c.node)) {
        const BasisIndex bit = env.mask(s->target);
        std::vector<double> next(probs.size(), 0.0);
        for (BasisIndex k = 0; k < probs.size(); ++k) {
            next[k & ~bit] += 0.5 * probs[k];
            next[k | bit] += 0.5 * probs[k];
        }
        probs = std::move(next);
    } else {
        throw SemanticError("'" + to_source_line(c) + "' is a quantum statement; run it in quantum mode");
    }
}

ClassicalDistribution marginal(const ClassicalDistribution& d, std::span<const std::string> returns) {
    std::vector<std::string> kept;
    for (const std::string& name : d.env.names()) {
        if (std::find(returns.begin(), returns.end(), name) != returns.end()) kept.push_back(name);
    }
    for (const std::string& r : returns) d.env.mask(r); // throws on unknown names
    ClassicalDistribution out{Environment(kept), {}};
    out.probs.assign(out.env.dimension(), 0.0);
    for (BasisIndex k = 0; k < d.probs.size(); ++k) {
        BasisIndex reduced = 0;
        for (const std::string& name : kept) reduced = (reduced << 1) | ((k & d.env.mask(name)) ? 1 : 0);
        out.probs[reduced] += d.probs[k];
    }
    return out;
}

} // namespace

ClassicalDistribution classical_apply(ClassicalDistribution d, const CompStmt& c) {
    apply_in_place(d.probs, c, d.env);
    return d;
}

ClassicalDistribution run_classical(const Program& p, const ClassicalRunOptions& options) {
    for (const Diagnostic& diag : validate(p, Mode::Classical)) {
        if (diag.severity == Severity::Error) {
            throw SemanticError(std::to_string(diag.loc.line) + ":" + std::to_string(diag.loc.column) + ": " +
                                diag.message);
        }
    }
    check_capacity(static_cast<int>(p.inputs.size()));
    ClassicalDistribution d{Environment(p.inputs), {}};
    d.probs.assign(d.env.dimension(), 0.0);
    d.probs[0] = 1.0;
    auto step = [&](std::string_view label) {
        if (options.on_step) options.on_step(label, d);
    };
    {
        std::string header = "def main(";
        for (size_t i = 0; i < p.inputs.size(); ++i) header += (i ? ", " : "") + p.inputs[i];
        step(header + (p.inputs.empty() ? "):" : " : bit):"));
    }
    for (const Stmt& s : p.body) {
        if (const auto* n = std::get_if<NewStmt>(&s.node)) {
            const int m = static_cast<int>(n->names.size());
            check_capacity(d.env.size() + m);
            std::vector<std::string> names = d.env.names();
            names.insert(names.end(), n->names.begin(), n->names.end());
            ClassicalDistribution grown{Environment(std::move(names)), {}};
            grown.probs.assign(grown.env.dimension(), 0.0);
            for (BasisIndex k = 0; k < d.probs.size(); ++k) grown.probs[k << m] = d.probs[k];
            d = std::move(grown);
        } else if (std::holds_alternative<MeasureStmt>(s.node)) {
            throw SemanticError("'measure' is not available in classical mode");
        } else {
            apply_in_place(d.probs, std::get<CompStmt>(s.node), d.env);
        }
        step(statement_label(s));
    }
    if (p.returns) {
        d = marginal(d, *p.returns);
        std::string label = "return";
        for (size_t i = 0; i < p.returns->size(); ++i) label += (i ? ", " : " ") + (*p.returns)[i];
        step(label);
    }
    return d;
}

Eigen::MatrixXd classical_matrix(std::span<const CompStmt> body, const Environment& env) {
    check_capacity(env.size(), kMaxMatrixBits);
    const std::size_t dim = env.dimension();
    Eigen::MatrixXd m(dim, dim);
    for (BasisIndex k = 0; k < dim; ++k) {
        std::vector<double> column(dim, 0.0);
        column[k] = 1.0;
        for (const CompStmt& c : body) apply_in_place(column, c, env);
        for (BasisIndex r = 0; r < dim; ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = column[r];
    }
    return m;
}

} // namespace qppl

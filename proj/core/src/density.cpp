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

#include "qppl/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qppl/engine.hpp"
#include "qppl/errors.hpp"
#include "qppl/validator.hpp"

namespace qppl {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;

MatrixXd kron(const MatrixXd& a, const MatrixXd& b) {
    MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

MatrixXd hadamard() {
    MatrixXd h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::numbers::sqrt2;
}

// Environment position of `name`, MSB first.
int position_of(const Environment& env, const std::string& name) {
    auto pos = env.position(name);
    if (!pos) throw SemanticError("variable '" + name + "' is not live");
    return *pos;
}

bool bit_at(BasisIndex k, int position, int n) { return (k >> (n - 1 - position)) & 1; }

MatrixXd statement_matrix(const CompStmt& c, const Environment& env) {
    const int n = env.size();
    const Index dim = static_cast<Index>(env.dimension());
    if (const auto* s = std::get_if<QRand>(&c.node)) {
        const int pos = position_of(env, s->target);
        const MatrixXd left = MatrixXd::Identity(Index{1} << pos, Index{1} << pos);
        const MatrixXd right = MatrixXd::Identity(Index{1} << (n - 1 - pos), Index{1} << (n - 1 - pos));
        return kron(left, kron(hadamard(), right));
    }
    if (std::holds_alternative<QNeg>(c.node)) return -MatrixXd::Identity(dim, dim);
    if (const auto* s = std::get_if<XorAssign>(&c.node)) {
        const int pos = position_of(env, s->target);
        MatrixXd p = MatrixXd::Zero(dim, dim);
        for (BasisIndex col = 0; col < env.dimension(); ++col) {
            // Row differs from the column only in the target bit, flipped iff E holds.
            BasisIndex row = col;
            if (eval_expr(s->rhs, col, env)) row ^= BasisIndex{1} << (n - 1 - pos);
            p(static_cast<Index>(row), static_cast<Index>(col)) = 1.0;
        }
        return p;
    }
    if (const auto* s = std::get_if<IfStmt>(&c.node)) {
        const MatrixXd body = comp_unitary(s->body, env);
        MatrixXd u = MatrixXd::Identity(dim, dim);
        for (BasisIndex col = 0; col < env.dimension(); ++col) {
            if (eval_expr(s->cond, col, env)) u.col(static_cast<Index>(col)) = body.col(static_cast<Index>(col));
        }
        return u;
    }
    throw SemanticError("'" + to_source_line(c) + "' has no density-matrix semantics");
}

// Observed value of the variables at `positions` in world k, first one most significant.
BasisIndex observed(BasisIndex k, const std::vector<int>& positions, int n) {
    BasisIndex r = 0;
    for (int pos : positions) r = (r << 1) | (bit_at(k, pos, n) ? 1 : 0);
    return r;
}

std::vector<int> positions_in_env_order(const Environment& env, std::span<const std::string> vars) {
    std::vector<bool> chosen(static_cast<size_t>(env.size()), false);
    for (const std::string& v : vars) chosen[static_cast<size_t>(position_of(env, v))] = true;
    std::vector<int> out;
    for (int i = 0; i < env.size(); ++i) {
        if (chosen[static_cast<size_t>(i)]) out.push_back(i);
    }
    return out;
}

} // namespace

MatrixXd comp_unitary(std::span<const CompStmt> body, const Environment& env) {
    check_capacity(env.size(), kMaxDensityBits);
    const Index dim = static_cast<Index>(env.dimension());
    MatrixXd u = MatrixXd::Identity(dim, dim);
    for (const CompStmt& c : body) u = statement_matrix(c, env) * u;
    return u;
}

DensityMatrix initial_density(std::vector<std::string> inputs) {
    check_capacity(static_cast<int>(inputs.size()), kMaxDensityBits);
    DensityMatrix d;
    d.env = Environment(std::move(inputs));
    const Index dim = static_cast<Index>(d.env.dimension());
    d.rho = MatrixXd::Zero(dim, dim);
    d.rho(0, 0) = 1.0;
    return d;
}

DensityMatrix density_measure(const DensityMatrix& d, std::span<const std::string> vars) {
    const int n = d.env.size();
    const std::vector<int> positions = positions_in_env_order(d.env, vars);
    const BasisIndex outcomes = BasisIndex{1} << positions.size();
    const Index dim = static_cast<Index>(d.env.dimension());
    DensityMatrix out{d.env, MatrixXd::Zero(dim, dim)};
    for (BasisIndex r = 0; r < outcomes; ++r) {
        Eigen::VectorXd projector = Eigen::VectorXd::Zero(dim);
        for (BasisIndex k = 0; k < d.env.dimension(); ++k) {
            if (observed(k, positions, n) == r) projector(static_cast<Index>(k)) = 1.0;
        }
        out.rho += projector.asDiagonal() * d.rho * projector.asDiagonal();
    }
    return out;
}

DensityMatrix density_return(const DensityMatrix& d, std::span<const std::string> returns) {
    const int n = d.env.size();
    std::vector<std::string> kept;
    std::vector<std::string> discarded;
    const std::vector<int> keep_pos = positions_in_env_order(d.env, returns);
    for (int i = 0; i < n; ++i) {
        const std::string& name = d.env.names()[static_cast<size_t>(i)];
        (std::find(keep_pos.begin(), keep_pos.end(), i) != keep_pos.end() ? kept : discarded).push_back(name);
    }
    if (discarded.empty()) return d;
    const DensityMatrix measured = density_measure(d, discarded);
    const std::vector<int> drop_pos = positions_in_env_order(d.env, discarded);

    DensityMatrix out;
    out.env = Environment(kept);
    const Index dim = static_cast<Index>(out.env.dimension());
    out.rho = MatrixXd::Zero(dim, dim);
    // Partial trace over the discarded bits.
    for (BasisIndex a = 0; a < d.env.dimension(); ++a) {
        for (BasisIndex b = 0; b < d.env.dimension(); ++b) {
            if (observed(a, drop_pos, n) != observed(b, drop_pos, n)) continue;
            out.rho(static_cast<Index>(observed(a, keep_pos, n)), static_cast<Index>(observed(b, keep_pos, n))) +=
                measured.rho(static_cast<Index>(a), static_cast<Index>(b));
        }
    }
    return out;
}

DensityMatrix density_apply(const DensityMatrix& d, const Stmt& stmt) {
    if (const auto* nw = std::get_if<NewStmt>(&stmt.node)) {
        const int m = static_cast<int>(nw->names.size());
        check_capacity(d.env.size() + m, kMaxDensityBits);
        std::vector<std::string> names = d.env.names();
        names.insert(names.end(), nw->names.begin(), nw->names.end());
        DensityMatrix out;
        out.env = Environment(std::move(names));
        // Isometry: the old index k maps to k with m zero bits appended.
        MatrixXd v = MatrixXd::Zero(static_cast<Index>(out.env.dimension()), static_cast<Index>(d.env.dimension()));
        for (BasisIndex k = 0; k < d.env.dimension(); ++k) v(static_cast<Index>(k << m), static_cast<Index>(k)) = 1.0;
        out.rho = v * d.rho * v.transpose();
        return out;
    }
    if (const auto* ms = std::get_if<MeasureStmt>(&stmt.node)) return density_measure(d, ms->names);
    const CompStmt& c = std::get<CompStmt>(stmt.node);
    const MatrixXd u = comp_unitary({&c, 1}, d.env);
    return DensityMatrix{d.env, u * d.rho * u.transpose()};
}

DensityMatrix run_density(const Program& p) {
    for (const Diagnostic& diag : validate(p, Mode::Quantum)) {
        if (diag.severity == Severity::Error) throw SemanticError(diag.message);
    }
    DensityMatrix d = initial_density(p.inputs);
    for (const Stmt& s : p.body) d = density_apply(d, s);
    if (p.returns) d = density_return(d, *p.returns);
    return d;
}

double check_equivalence(const Program& p) {
    const DensityMatrix direct = run_density(p);
    const DensityMatrix via_branches = to_density(run(p));
    if (!(direct.env == via_branches.env)) {
        throw std::logic_error("density and branch semantics disagree on the variable order");
    }
    return (direct.rho - via_branches.rho).cwiseAbs().maxCoeff();
}

} // namespace qppl

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

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qppl/state.hpp"
#include "qppl/syntax.hpp"

namespace qppl {

/// Largest environment for which whole-operator matrices are materialized.
inline constexpr int kMaxMatrixBits = 10;

/// Value of `e` in the world `basis`. Throws SemanticError on an unbound
/// variable.
bool eval_expr(const Expr& e, BasisIndex basis, const Environment& env);

// Each operation below acts on every branch independently. Preconditions that
// the validator normally guarantees are re-checked and reported as
// SemanticError.

/// Hadamard on `target`: |0> -> (|0>+|1>)/sqrt2, |1> -> (|0>-|1>)/sqrt2.
TwoLayerState apply_qrand(TwoLayerState s, std::string_view target);
/// Negates every amplitude.
TwoLayerState apply_qneg(TwoLayerState s);
/// Permutes worlds: target <- target xor rhs. `target` must not occur in rhs.
TwoLayerState apply_xor_assign(TwoLayerState s, std::string_view target, const Expr& rhs);
/// Runs `body` only in the worlds where `cond` holds. `body` must not assign
/// any variable of `cond`.
TwoLayerState apply_if(TwoLayerState s, const Expr& cond, std::span<const CompStmt> body);
TwoLayerState apply_comp(TwoLayerState s, const CompStmt& c);

/// Splits each branch by the observed value of `vars`.
///
/// Branch j becomes one branch per observed value y with probability
/// p_j * Q_{j,y}^2 and amplitudes q_{j,x,y} / Q_{j,y}, where Q_{j,y}^2 sums
/// q^2 over the worlds of branch j showing y. Children are ordered by parent
/// index, then by y read MSB-first in environment order. Children with
/// probability at or below kPruneThreshold are dropped and the remaining
/// probabilities renormalized.
TwoLayerState apply_measure(TwoLayerState s, std::span<const std::string> vars);

/// Allocates fresh zero-initialized variables (see extend()).
TwoLayerState apply_new(TwoLayerState s, std::span<const std::string> names);

/// Measures every variable not in `returns`, then deletes those bits.
/// The surviving variables keep their declaration order.
TwoLayerState apply_return(TwoLayerState s, std::span<const std::string> returns);

TwoLayerState apply_statement(TwoLayerState s, const Stmt& stmt);

/// Called with the rendered statement and the state right after it. The
/// first call carries the initial state and the `def main(...)` header.
using StepObserver = std::function<void(std::string_view label, const TwoLayerState& state)>;

struct RunOptions {
    StepObserver on_step;
    /// Check TwoLayerState invariants after every statement; a violation
    /// throws std::logic_error.
    bool check_invariants = false;
};

/// Executes a quantum-mode program from the all-zero input state.
/// Throws SemanticError if the program does not validate and CapacityError
/// if it needs more than kMaxLiveBits live bits.
TwoLayerState run(const Program& p, const RunOptions& options = {});

/// The matrix U with U|k> = (body applied to |k>), column by column.
/// Throws CapacityError past kMaxMatrixBits.
Eigen::MatrixXd comp_matrix(std::span<const CompStmt> body, const Environment& env);

} // namespace qppl

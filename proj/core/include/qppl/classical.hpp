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
#include <string_view>

#include <Eigen/Dense>

#include "qppl/state.hpp"
#include "qppl/syntax.hpp"

namespace qppl {

/// Ordinary probability distribution over worlds (probabilities sum to 1).
using ClassicalDistribution = Distribution;

using ClassicalStepObserver = std::function<void(std::string_view label, const ClassicalDistribution& dist)>;

struct ClassicalRunOptions {
    ClassicalStepObserver on_step;
};

/// Applies a computational statement world by world: `x := E` and `^=`
/// move each world's mass to its successor, `x := rand_bit()` splits it
/// half and half, and `if` runs the body on the worlds where the condition
/// holds. Quantum statements throw SemanticError.
ClassicalDistribution classical_apply(ClassicalDistribution d, const CompStmt& c);

/// Runs a classical-mode program. Throws SemanticError if the program does
/// not validate in classical mode.
ClassicalDistribution run_classical(const Program& p, const ClassicalRunOptions& options = {});

/// Transition matrix of `body`: column k is the distribution reached from
/// world k. Throws CapacityError past kMaxMatrixBits.
Eigen::MatrixXd classical_matrix(std::span<const CompStmt> body, const Environment& env);

} // namespace qppl

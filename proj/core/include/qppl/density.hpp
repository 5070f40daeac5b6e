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

#include <span>

#include <Eigen/Dense>

#include "qppl/state.hpp"
#include "qppl/syntax.hpp"

namespace qppl {

// Density-matrix semantics, kept independent of the branch engine: operators
// are assembled as explicit matrices from the statement rules (Kronecker
// products for qrand, permutation matrices for ^=, block selection for if)
// and applied as rho -> U rho U^T.

/// Largest number of live bits the oracle will handle.
inline constexpr int kMaxDensityBits = 10;

/// Explicit operator of a computational statement sequence over `env`.
Eigen::MatrixXd comp_unitary(std::span<const CompStmt> body, const Environment& env);

DensityMatrix initial_density(std::vector<std::string> inputs);
DensityMatrix density_apply(const DensityMatrix& d, const Stmt& stmt);
/// rho -> sum_r P_r rho P_r over the observed values r of `vars`.
DensityMatrix density_measure(const DensityMatrix& d, std::span<const std::string> vars);
/// Measures then traces out every variable not in `returns`.
DensityMatrix density_return(const DensityMatrix& d, std::span<const std::string> returns);

/// Runs a quantum-mode program in the density-matrix semantics.
/// Throws SemanticError if the program does not validate and CapacityError
/// past kMaxDensityBits live bits.
DensityMatrix run_density(const Program& p);

/// Max-abs entrywise difference between to_density(run(p)) and run_density(p).
double check_equivalence(const Program& p);

} // namespace qppl

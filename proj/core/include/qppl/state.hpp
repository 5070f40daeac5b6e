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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qppl {

/// Tolerance on state invariants (total probability, branch norms).
inline constexpr double kStateTolerance = 1e-10;
/// Tolerance on exact algebraic identities.
inline constexpr double kIdentityTolerance = 1e-12;
/// Branches whose classical probability is at or below this are dropped.
inline constexpr double kPruneThreshold = 1e-12;
/// Largest number of live bits a dense state may have.
inline constexpr int kMaxLiveBits = 24;

using BasisIndex = std::uint64_t;

/// Ordered live variables. The variable at position 0 is the most
/// significant bit of a basis index; later declarations are less significant.
class Environment {
public:
    Environment() = default;
    explicit Environment(std::vector<std::string> names);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    std::size_t dimension() const noexcept { return std::size_t{1} << names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<int> position(std::string_view name) const;
    bool contains(std::string_view name) const { return position(name).has_value(); }

    /// Bit mask of `name` within a basis index. Throws SemanticError if absent.
    BasisIndex mask(std::string_view name) const;

    /// Basis index rendered MSB-first, one character per variable.
    std::string bits(BasisIndex index) const;

    friend bool operator==(const Environment&, const Environment&) = default;

private:
    std::vector<std::string> names_;
};

/// Real amplitude vector over the 2^n basis states of an environment.
struct AmplitudeState {
    std::vector<double> amps;

    std::size_t dimension() const noexcept { return amps.size(); }
    double norm_squared() const;

    static AmplitudeState basis(std::size_t dimension, BasisIndex index);
};

struct Branch {
    double p = 1.0;
    AmplitudeState state;
};

/// Classical distribution over amplitude branches sharing one environment.
struct TwoLayerState {
    Environment env;
    std::vector<Branch> branches;

    /// Largest deviation from the invariants: |sum p - 1|, |norm^2 - 1| per
    /// branch, and any non-positive p or wrong branch length (reported as 1).
    double invariant_error() const;
    bool is_valid(double tolerance = kStateTolerance) const { return invariant_error() <= tolerance; }
};

/// Real symmetric density matrix over an environment.
struct DensityMatrix {
    Environment env;
    Eigen::MatrixXd rho;

    /// max(|trace - 1|, asymmetry, -min eigenvalue). Zero for a valid state.
    double invariant_error() const;
};

/// Probability of each basis state, indexed by basis index.
struct Distribution {
    Environment env;
    std::vector<double> probs;

    double total() const;
    /// Basis states with probability above `threshold`, ascending.
    std::vector<BasisIndex> support(double threshold = kPruneThreshold) const;
};

/// Throws CapacityError if `bits` live bits cannot be represented densely.
void check_capacity(int bits, int limit = kMaxLiveBits);

/// All inputs zero with certainty: [(1, |0...0>)].
TwoLayerState initial_state(std::vector<std::string> inputs);

/// Sum of a[k] * b[k]. Throws std::invalid_argument on a dimension mismatch.
double inner_product(const AmplitudeState& a, const AmplitudeState& b);

/// Appends `names` as new least-significant bits initialized to 0.
TwoLayerState extend(TwoLayerState s, std::span<const std::string> names);

DensityMatrix to_density(const TwoLayerState& s);

/// P(x) = sum_j p_j q_{j,x}^2.
Distribution output_distribution(const TwoLayerState& s);

/// Serialized form: {"vars": [...], "branches": [{"p": .., "amps": [..]}, ...]}
std::string state_to_json(const TwoLayerState& s, int indent = 2);
/// Inverse of state_to_json. Throws std::invalid_argument on schema errors.
TwoLayerState state_from_json(std::string_view text);

} // namespace qppl

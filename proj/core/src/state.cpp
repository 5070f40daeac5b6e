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

#include "qppl/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qppl/errors.hpp"

namespace qppl {

Environment::Environment(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const std::string& n : names_) {
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "' in environment");
    }
}

std::optional<int> Environment::position(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

BasisIndex Environment::mask(std::string_view name) const {
    auto pos = position(name);
    if (!pos) throw SemanticError("variable '" + std::string(name) + "' is not live");
    return BasisIndex{1} << (size() - 1 - *pos);
}

std::string Environment::bits(BasisIndex index) const {
    std::string out(names_.size(), '0');
    for (int i = 0; i < size(); ++i) {
        if (index >> (size() - 1 - i) & 1) out[static_cast<size_t>(i)] = '1';
    }
    return out;
}

double AmplitudeState::norm_squared() const {
    double sum = 0.0;
    for (double a : amps) sum += a * a;
    return sum;
}

AmplitudeState AmplitudeState::basis(std::size_t dimension, BasisIndex index) {
    AmplitudeState s;
    s.amps.assign(dimension, 0.0);
    s.amps.at(index) = 1.0;
    return s;
}

double TwoLayerState::invariant_error() const {
    if (branches.empty()) return 1.0;
    double total = 0.0;
    double worst = 0.0;
    for (const Branch& b : branches) {
        if (!(b.p > 0.0) || b.state.dimension() != env.dimension()) return 1.0;
        total += b.p;
        worst = std::max(worst, std::abs(b.state.norm_squared() - 1.0));
    }
    return std::max(worst, std::abs(total - 1.0));
}

double DensityMatrix::invariant_error() const {
    const Eigen::Index dim = static_cast<Eigen::Index>(env.dimension());
    if (rho.rows() != dim || rho.cols() != dim) return 1.0;
    double err = std::abs(rho.trace() - 1.0);
    err = std::max(err, (rho - rho.transpose()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(rho, Eigen::EigenvaluesOnly);
    err = std::max(err, -eig.eigenvalues().minCoeff());
    return err;
}

double Distribution::total() const {
    double sum = 0.0;
    for (double p : probs) sum += p;
    return sum;
}

std::vector<BasisIndex> Distribution::support(double threshold) const {
    std::vector<BasisIndex> out;
    for (BasisIndex i = 0; i < probs.size(); ++i) {
        if (probs[i] > threshold) out.push_back(i);
    }
    return out;
}

void check_capacity(int bits, int limit) {
    if (bits > limit) {
        throw CapacityError("program needs " + std::to_string(bits) + " live bits; the limit is " +
                            std::to_string(limit));
    }
}

TwoLayerState initial_state(std::vector<std::string> inputs) {
    check_capacity(static_cast<int>(inputs.size()));
    TwoLayerState s;
    s.env = Environment(std::move(inputs));
    s.branches.push_back({1.0, AmplitudeState::basis(s.env.dimension(), 0)});
    return s;
}

double inner_product(const AmplitudeState& a, const AmplitudeState& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("inner_product: dimension mismatch (" + std::to_string(a.dimension()) + " vs " +
                                    std::to_string(b.dimension()) + ")");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < a.amps.size(); ++k) sum += a.amps[k] * b.amps[k];
    return sum;
}

TwoLayerState extend(TwoLayerState s, std::span<const std::string> names) {
    if (names.empty()) return s;
    const int m = static_cast<int>(names.size());
    check_capacity(s.env.size() + m);
    std::vector<std::string> all = s.env.names();
    all.insert(all.end(), names.begin(), names.end());
    s.env = Environment(std::move(all));
    for (Branch& b : s.branches) {
        std::vector<double> grown(s.env.dimension(), 0.0);
        for (BasisIndex k = 0; k < b.state.amps.size(); ++k) grown[k << m] = b.state.amps[k];
        b.state.amps = std::move(grown);
    }
    return s;
}

DensityMatrix to_density(const TwoLayerState& s) {
    const Eigen::Index dim = static_cast<Eigen::Index>(s.env.dimension());
    DensityMatrix d{s.env, Eigen::MatrixXd::Zero(dim, dim)};
    for (const Branch& b : s.branches) {
        Eigen::Map<const Eigen::VectorXd> q(b.state.amps.data(), dim);
        d.rho.noalias() += b.p * q * q.transpose();
    }
    return d;
}

Distribution output_distribution(const TwoLayerState& s) {
    Distribution out{s.env, std::vector<double>(s.env.dimension(), 0.0)};
    for (const Branch& b : s.branches) {
        for (std::size_t k = 0; k < b.state.amps.size(); ++k) {
            const double q = b.state.amps[k];
            out.probs[k] += b.p * q * q;
        }
    }
    return out;
}

} // namespace qppl

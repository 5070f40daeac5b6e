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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qppl::testing {

bool reference_eval(const Expr& e, const std::map<std::string, bool>& assignment) {
    switch (e.kind) {
    case Expr::Kind::Var: return assignment.at(e.name);
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Not: return !reference_eval(e.operands.at(0), assignment);
    case Expr::Kind::And: return reference_eval(e.operands.at(0), assignment) && reference_eval(e.operands.at(1), assignment);
    case Expr::Kind::Or: return reference_eval(e.operands.at(0), assignment) || reference_eval(e.operands.at(1), assignment);
    }
    return false;
}

std::map<std::string, bool> world_assignment(const std::vector<std::string>& names, std::uint64_t world) {
    std::map<std::string, bool> out;
    const size_t n = names.size();
    for (size_t i = 0; i < n; ++i) out[names[i]] = ((world >> (n - 1 - i)) & 1U) != 0;
    return out;
}

TwoLayerState brute_force_measure(const TwoLayerState& s, const std::vector<std::string>& vars) {
    TwoLayerState out{s.env, {}};
    for (const Branch& b : s.branches) {
        // bucket key: measured bits as a string in environment order
        std::map<std::string, std::vector<std::uint64_t>> buckets;
        for (std::uint64_t w = 0; w < b.state.amps.size(); ++w) {
            const auto assign = world_assignment(s.env.names(), w);
            std::string key;
            for (const std::string& name : s.env.names()) {
                if (std::find(vars.begin(), vars.end(), name) != vars.end()) key += assign.at(name) ? '1' : '0';
            }
            buckets[key].push_back(w);
        }
        for (const auto& [key, worlds] : buckets) {
            double weight = 0.0;
            for (std::uint64_t w : worlds) weight += b.state.amps[w] * b.state.amps[w];
            if (b.p * weight <= 1e-12) continue;
            AmplitudeState child{std::vector<double>(b.state.amps.size(), 0.0)};
            for (std::uint64_t w : worlds) child.amps[w] = b.state.amps[w] / std::sqrt(weight);
            out.branches.push_back({b.p * weight, child});
        }
    }
    double total = 0.0;
    for (const Branch& b : out.branches) total += b.p;
    for (Branch& b : out.branches) b.p /= total;
    return out;
}

Eigen::MatrixXd hand_density(const TwoLayerState& s) {
    const auto dim = static_cast<Eigen::Index>(s.env.dimension());
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
    for (const Branch& b : s.branches) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            for (Eigen::Index c = 0; c < dim; ++c) {
                rho(r, c) += b.p * b.state.amps[static_cast<size_t>(r)] * b.state.amps[static_cast<size_t>(c)];
            }
        }
    }
    return rho;
}

double state_distance(const TwoLayerState& a, const TwoLayerState& b) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    if (a.env != b.env || a.branches.size() != b.branches.size()) return kInf;
    double worst = 0.0;
    for (size_t j = 0; j < a.branches.size(); ++j) {
        const Branch& x = a.branches[j];
        const Branch& y = b.branches[j];
        if (x.state.amps.size() != y.state.amps.size()) return kInf;
        worst = std::max(worst, std::abs(x.p - y.p));
        for (size_t k = 0; k < x.state.amps.size(); ++k) {
            worst = std::max(worst, std::abs(x.state.amps[k] - y.state.amps[k]));
        }
    }
    return worst;
}

AmplitudeState random_unit_vector(std::mt19937_64& rng, int bits) {
    std::normal_distribution<double> gauss;
    AmplitudeState a{std::vector<double>(std::size_t{1} << bits)};
    double norm = 0.0;
    for (double& q : a.amps) {
        q = gauss(rng);
        norm += q * q;
    }
    for (double& q : a.amps) q /= std::sqrt(norm);
    return a;
}

TwoLayerState random_state(std::mt19937_64& rng, std::vector<std::string> names, int branches) {
    const int bits = static_cast<int>(names.size());
    TwoLayerState s{Environment(std::move(names)), {}};
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    double total = 0.0;
    for (int j = 0; j < branches; ++j) {
        const double p = weight(rng);
        total += p;
        s.branches.push_back({p, random_unit_vector(rng, bits)});
    }
    for (Branch& b : s.branches) b.p /= total;
    return s;
}

TwoLayerState make_state(std::vector<std::string> names, std::vector<std::pair<double, std::vector<double>>> branches) {
    TwoLayerState s{Environment(std::move(names)), {}};
    for (auto& [p, amps] : branches) s.branches.push_back({p, AmplitudeState{std::move(amps)}});
    return s;
}

} // namespace qppl::testing

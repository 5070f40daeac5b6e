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

#include "qppl/sampling.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qppl {

std::vector<BasisIndex> sample(const Distribution& dist, std::uint64_t seed, std::size_t shots) {
    const std::vector<BasisIndex> support = dist.support(0.0);
    if (support.empty()) throw std::invalid_argument("sample: distribution has no mass");

    std::vector<double> cumulative;
    cumulative.reserve(support.size());
    double running = 0.0;
    for (BasisIndex k : support) {
        running += dist.probs[k];
        cumulative.push_back(running);
    }

    std::mt19937_64 rng(seed);
    std::vector<BasisIndex> out;
    out.reserve(shots);
    for (std::size_t i = 0; i < shots; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto pick = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), support.size() - 1);
        out.push_back(support[pick]);
    }
    return out;
}

} // namespace qppl

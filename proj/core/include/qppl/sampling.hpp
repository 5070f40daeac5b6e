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
#include <vector>

#include "qppl/state.hpp"

namespace qppl {

/// Draws `shots` i.i.d. basis states from `dist` by inverse-CDF lookup.
///
/// The stream is std::mt19937_64 seeded with `seed`, each draw consuming one
/// 64-bit word turned into a double in [0, 1) from its top 53 bits, so a
/// given (dist, seed, shots) yields the same outcomes on every platform.
std::vector<BasisIndex> sample(const Distribution& dist, std::uint64_t seed, std::size_t shots);

} // namespace qppl

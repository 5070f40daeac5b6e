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

#include <string>
#include <string_view>

#include "qppl/state.hpp"

namespace qppl {

// Human-readable output shared by the CLI and the tests. Numbers use six
// significant digits (%g) in traces and six decimals in distributions.

/// `0.707107|00⟩ - 0.707107|10⟩`; zero amplitudes are omitted.
std::string format_amplitudes(const AmplitudeState& a, const Environment& env);

/// The label line followed by one `  p=<p>: <amplitudes>` line per branch.
std::string format_trace_step(std::string_view label, const TwoLayerState& s);

/// The label line followed by `  p=0.5|00⟩ + p=0.5|10⟩`.
std::string format_classical_step(std::string_view label, const Distribution& d);

/// Outcome label: the bits MSB-first, or `()` for an empty environment.
std::string format_outcome(const Environment& env, BasisIndex k);

/// One `<outcome>: <p>` line per basis state with p > kPruneThreshold.
/// A single variable prints as its bit (`0: 1.000000`); several print as
/// `x=1 y=1: 1.000000`; none prints as `(): 1.000000`.
std::string format_distribution(const Distribution& d);

} // namespace qppl

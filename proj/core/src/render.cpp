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

#include "qppl/render.hpp"

#include <cmath>
#include <cstdio>

namespace qppl {
namespace {

constexpr const char* kKetClose = "\xE2\x9F\xA9"; // U+27E9

std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string ket(const Environment& env, BasisIndex k) { return "|" + env.bits(k) + kKetClose; }

} // namespace

std::string format_amplitudes(const AmplitudeState& a, const Environment& env) {
    std::string out;
    for (BasisIndex k = 0; k < a.amps.size(); ++k) {
        const double q = a.amps[k];
        if (std::abs(q) <= kIdentityTolerance) continue;
        if (out.empty()) {
            out += sig6(q);
        } else {
            out += q < 0 ? " - " : " + ";
            out += sig6(std::abs(q));
        }
        out += ket(env, k);
    }
    return out.empty() ? "0" : out;
}

std::string format_trace_step(std::string_view label, const TwoLayerState& s) {
    std::string out(label);
    out += '\n';
    for (const Branch& b : s.branches) {
        out += "  p=" + sig6(b.p) + ": " + format_amplitudes(b.state, s.env) + '\n';
    }
    return out;
}

std::string format_classical_step(std::string_view label, const Distribution& d) {
    std::string out(label);
    out += "\n ";
    bool first = true;
    for (BasisIndex k : d.support()) {
        out += first ? " " : " + ";
        out += "p=" + sig6(d.probs[k]) + ket(d.env, k);
        first = false;
    }
    return out + '\n';
}

std::string format_outcome(const Environment& env, BasisIndex k) {
    return env.size() == 0 ? "()" : env.bits(k);
}

std::string format_distribution(const Distribution& d) {
    std::string out;
    for (BasisIndex k : d.support()) {
        if (d.env.size() <= 1) {
            out += format_outcome(d.env, k);
        } else {
            const std::string bits = d.env.bits(k);
            for (int i = 0; i < d.env.size(); ++i) {
                if (i) out += ' ';
                out += d.env.names()[static_cast<size_t>(i)] + "=" + bits[static_cast<size_t>(i)];
            }
        }
        out += ": " + fixed6(d.probs[k]) + '\n';
    }
    return out;
}

} // namespace qppl

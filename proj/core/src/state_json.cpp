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

#include <stdexcept>

#include "json.hpp"
#include "qppl/state.hpp"

namespace qppl {

using nlohmann::json;

std::string state_to_json(const TwoLayerState& s, int indent) {
    json branches = json::array();
    for (const Branch& b : s.branches) {
        branches.push_back({{"p", b.p}, {"amps", b.state.amps}});
    }
    json doc = {{"vars", s.env.names()}, {"branches", std::move(branches)}};
    return doc.dump(indent);
}

TwoLayerState state_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("state JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("branches")) {
        throw std::invalid_argument("state JSON: expected an object with \"vars\" and \"branches\"");
    }
    try {
        TwoLayerState s;
        s.env = Environment(doc.at("vars").get<std::vector<std::string>>());
        for (const json& b : doc.at("branches")) {
            Branch branch;
            branch.p = b.at("p").get<double>();
            branch.state.amps = b.at("amps").get<std::vector<double>>();
            if (branch.state.dimension() != s.env.dimension()) {
                throw std::invalid_argument("state JSON: branch has " + std::to_string(branch.state.dimension()) +
                                            " amplitudes, expected " + std::to_string(s.env.dimension()));
            }
            s.branches.push_back(std::move(branch));
        }
        return s;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("state JSON: ") + e.what());
    }
}

} // namespace qppl

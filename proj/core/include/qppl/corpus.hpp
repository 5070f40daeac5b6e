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
#include <string_view>

#include "qppl/validator.hpp"

namespace qppl {

/// A program shipped with the library (the files under corpus/).
struct CorpusEntry {
    std::string_view name;
    std::string_view source;
};

std::span<const CorpusEntry> bundled_corpus();
const CorpusEntry* find_corpus_entry(std::string_view name);

/// Classical if the program uses `:=` or `rand_bit()`, quantum otherwise.
Mode natural_mode(const Program& p);

} // namespace qppl

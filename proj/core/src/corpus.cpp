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

#include "qppl/corpus.hpp"

namespace qppl {
namespace detail {
extern const std::span<const CorpusEntry> kCorpus;
}

namespace {

bool uses_classical(const CompStmt& c) {
    if (std::holds_alternative<Assign>(c.node) || std::holds_alternative<RandAssign>(c.node)) return true;
    if (const auto* s = std::get_if<IfStmt>(&c.node)) {
        for (const CompStmt& b : s->body) {
            if (uses_classical(b)) return true;
        }
    }
    return false;
}

} // namespace

std::span<const CorpusEntry> bundled_corpus() { return detail::kCorpus; }

const CorpusEntry* find_corpus_entry(std::string_view name) {
    for (const CorpusEntry& e : detail::kCorpus) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

Mode natural_mode(const Program& p) {
    for (const Stmt& s : p.body) {
        if (const auto* c = std::get_if<CompStmt>(&s.node); c && uses_classical(*c)) return Mode::Classical;
    }
    return Mode::Quantum;
}

} // namespace qppl

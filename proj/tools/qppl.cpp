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

// qppl: run, check and inspect quantum probabilistic programs.
//
// Exit codes: 0 success, 1 parse/validation/input errors, 2 capacity errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qppl/classical.hpp"
#include "qppl/corpus.hpp"
#include "qppl/density.hpp"
#include "qppl/engine.hpp"
#include "qppl/parser.hpp"
#include "qppl/render.hpp"
#include "qppl/sampling.hpp"
#include "qppl/state.hpp"
#include "qppl/validator.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitCapacity = 2;

struct Source {
    std::string name;
    std::string text;
};

// Reads FILE from disk, falling back to the bundled corpus ("fig3" or "fig3.qppl").
std::optional<Source> load(const std::string& path) {
    if (std::ifstream in{path, std::ios::binary}) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return Source{path, ss.str()};
    }
    std::string stem = path;
    if (stem.size() > 5 && stem.ends_with(".qppl")) stem.resize(stem.size() - 5);
    if (const qppl::CorpusEntry* e = qppl::find_corpus_entry(stem)) {
        return Source{path, std::string(e->source)};
    }
    return std::nullopt;
}

std::string_view mode_name(qppl::Mode m) { return m == qppl::Mode::Quantum ? "quantum" : "classical"; }

// Parses and validates; prints diagnostics. Returns the program only if usable.
std::optional<qppl::Program> front_end(const Source& src, std::optional<qppl::Mode>& mode) {
    qppl::Program p;
    try {
        p = qppl::parse(src.text);
    } catch (const qppl::ParseError& e) {
        std::cerr << src.name << ':' << e.loc().line << ':' << e.loc().column << ": error[" << e.code()
                  << "]: " << e.what() << '\n';
        return std::nullopt;
    }
    if (!mode) mode = qppl::natural_mode(p);
    const auto diags = qppl::validate(p, *mode);
    for (const qppl::Diagnostic& d : diags) std::cerr << qppl::render(d, src.name) << '\n';
    if (qppl::has_errors(diags)) return std::nullopt;
    return p;
}

std::optional<qppl::Mode> parse_mode(const std::string& s) {
    if (s == "quantum") return qppl::Mode::Quantum;
    if (s == "classical") return qppl::Mode::Classical;
    return std::nullopt;
}

struct RunFlags {
    std::string file;
    std::string mode = "auto";
    bool trace = false;
    bool dist = false;
    bool oracle = false;
    std::string dump_path;
    std::optional<std::size_t> shots;
    std::uint64_t seed = 0;
};

// Classical distributions are dumped as one basis-state branch per outcome.
qppl::TwoLayerState as_branches(const qppl::Distribution& d) {
    qppl::TwoLayerState s{d.env, {}};
    for (qppl::BasisIndex k : d.support()) {
        s.branches.push_back({d.probs[k], qppl::AmplitudeState::basis(d.env.dimension(), k)});
    }
    return s;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out{path, std::ios::binary};
    out << text;
    return static_cast<bool>(out);
}

int cmd_run(const RunFlags& f) {
    const auto src = load(f.file);
    if (!src) {
        std::cerr << "qppl: cannot read '" << f.file << "'\n";
        return kExitInput;
    }
    std::optional<qppl::Mode> mode;
    if (f.mode != "auto") mode = parse_mode(f.mode);
    const auto program = front_end(*src, mode);
    if (!program) return kExitInput;

    const bool quiet = f.trace || f.dist || f.shots || f.oracle || !f.dump_path.empty();
    std::string out;
    qppl::Distribution dist;

    if (*mode == qppl::Mode::Quantum) {
        qppl::RunOptions opts;
        if (f.trace) {
            opts.on_step = [&](std::string_view label, const qppl::TwoLayerState& s) {
                out += qppl::format_trace_step(label, s);
            };
        }
        const qppl::TwoLayerState final_state = qppl::run(*program, opts);
        if (!quiet) out += qppl::format_trace_step("final state", final_state);
        if (!f.dump_path.empty() && !write_file(f.dump_path, qppl::state_to_json(final_state) + "\n")) {
            std::cerr << "qppl: cannot write '" << f.dump_path << "'\n";
            return kExitInput;
        }
        dist = qppl::output_distribution(final_state);
    } else {
        if (f.oracle) {
            std::cerr << "qppl: --oracle compares quantum semantics; not available in classical mode\n";
            return kExitInput;
        }
        qppl::ClassicalRunOptions opts;
        if (f.trace) {
            opts.on_step = [&](std::string_view label, const qppl::Distribution& d) {
                out += qppl::format_classical_step(label, d);
            };
        }
        dist = qppl::run_classical(*program, opts);
        if (!quiet) out += qppl::format_classical_step("final distribution", dist);
        if (!f.dump_path.empty() && !write_file(f.dump_path, qppl::state_to_json(as_branches(dist)) + "\n")) {
            std::cerr << "qppl: cannot write '" << f.dump_path << "'\n";
            return kExitInput;
        }
    }

    if (f.dist) out += qppl::format_distribution(dist);
    if (f.shots) {
        for (qppl::BasisIndex k : qppl::sample(dist, f.seed, *f.shots)) {
            out += qppl::format_outcome(dist.env, k);
            out += '\n';
        }
    }
    if (f.oracle) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "oracle deviation: %.3e\n", qppl::check_equivalence(*program));
        out += buf;
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return 0;
}

int cmd_check(const std::string& file, const std::string& mode_flag) {
    const auto src = load(file);
    if (!src) {
        std::cerr << "qppl: cannot read '" << file << "'\n";
        return kExitInput;
    }
    std::optional<qppl::Mode> mode;
    if (mode_flag != "auto") mode = parse_mode(mode_flag);
    if (!front_end(*src, mode)) return kExitInput;
    std::cout << src->name << ": ok (" << mode_name(*mode) << ")\n";
    return 0;
}

int cmd_examples(const std::string& show) {
    if (!show.empty()) {
        const qppl::CorpusEntry* e = qppl::find_corpus_entry(show);
        if (!e) {
            std::cerr << "qppl: no bundled example named '" << show << "'\n";
            return kExitInput;
        }
        std::cout << e->source;
        return 0;
    }
    for (const qppl::CorpusEntry& e : qppl::bundled_corpus()) {
        std::string mode = "?";
        try {
            mode = std::string(mode_name(qppl::natural_mode(qppl::parse(e.source))));
        } catch (const qppl::ParseError&) {
        }
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-18s %s\n", std::string(e.name).c_str(), mode.c_str());
        std::cout << buf;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum probabilistic programming language interpreter", "qppl"};
    app.require_subcommand(1);
    const std::vector<std::string> modes{"auto", "quantum", "classical"};

    RunFlags rf;
    CLI::App* run = app.add_subcommand("run", "Execute a program");
    run->add_option("FILE", rf.file, "Program file (or bundled example name)")->required();
    run->add_option("--mode", rf.mode, "Semantics; auto picks classical when ':=' or rand_bit() occur")
        ->check(CLI::IsMember(modes))
        ->capture_default_str();
    run->add_flag("--trace", rf.trace, "Print the state after every top-level statement");
    run->add_flag("--dist", rf.dist, "Print the exact output distribution");
    run->add_flag("--oracle", rf.oracle, "Cross-check against the density-matrix semantics");
    run->add_option("--dump-state", rf.dump_path, "Write the final state as JSON");
    run->add_option("--shots", rf.shots, "Draw N samples from the output distribution");
    run->add_option("--seed", rf.seed, "Sampling seed")->capture_default_str();

    std::string check_file;
    std::string check_mode = "auto";
    CLI::App* check = app.add_subcommand("check", "Parse and validate only");
    check->add_option("FILE", check_file, "Program file (or bundled example name)")->required();
    check->add_option("--mode", check_mode, "Validation mode")->check(CLI::IsMember(modes))->capture_default_str();

    std::string show;
    CLI::App* examples = app.add_subcommand("examples", "List bundled example programs");
    examples->add_option("--show", show, "Print the source of one example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*run) return cmd_run(rf);
        if (*check) return cmd_check(check_file, check_mode);
        return cmd_examples(show);
    } catch (const qppl::CapacityError& e) {
        std::cerr << "qppl: capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const qppl::SemanticError& e) {
        std::cerr << "qppl: error: " << e.what() << '\n';
        return kExitInput;
    }
}

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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Numbers on each line are the measured values.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qppl/classical.hpp"
#include "qppl/corpus.hpp"
#include "qppl/density.hpp"
#include "qppl/engine.hpp"
#include "qppl/parser.hpp"
#include "qppl/render.hpp"
#include "random_programs.hpp"

namespace {

using namespace qppl;
using testing::kInvSqrt2;
using testing::make_state;
using testing::state_distance;
using Clock = std::chrono::steady_clock;

constexpr double kStateTol = 1e-10;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Program corpus(const char* name) { return parse(find_corpus_entry(name)->source); }

// Worst wall time over a few repetitions of parse + run; returns the last result.
template <class F>
double worst_ms(const char* name, F&& body, int reps = 5) {
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = Clock::now();
        body(parse(find_corpus_entry(name)->source));
        worst = std::max(worst, ms_since(t0));
    }
    return worst;
}

Outcome quantum_coin() {
    const Program p = corpus("fig3");
    std::vector<TwoLayerState> steps;
    std::string trace;
    const TwoLayerState final_state = run(p, {[&](std::string_view label, const TwoLayerState& s) {
                                                  steps.push_back(s);
                                                  trace += format_trace_step(label, s);
                                              },
                                              true});
    const double final_err = state_distance(final_state, make_state({"x", "y"}, {{1.0, {0, 0, 0, 1}}}));
    // steps: header, qrand, if, qrand, y ^= x, return
    const double plus_err =
        steps.size() > 1 ? state_distance(steps[1], make_state({"x", "y"}, {{1.0, {kInvSqrt2, 0, kInvSqrt2, 0}}})) : 1;
    const double minus_err =
        steps.size() > 2 ? state_distance(steps[2], make_state({"x", "y"}, {{1.0, {kInvSqrt2, 0, -kInvSqrt2, 0}}})) : 1;
    const bool rows_printed = trace.find("p=1: 0.707107|00⟩ + 0.707107|10⟩\n") != std::string::npos &&
                              trace.find("p=1: 0.707107|00⟩ - 0.707107|10⟩\n") != std::string::npos;
    const double ms = worst_ms("fig3", [](const Program& q) { run(q); });
    const double row_err = std::max(plus_err, minus_err);
    return {final_err <= kStateTol && row_err <= kStateTol && rows_printed && ms < 10.0,
            "final [(1,|11>)] err " + fmt("%.1e", final_err) + ", trace rows err " + fmt("%.1e", row_err) +
                (rows_printed ? ", rows printed" : ", rows NOT printed") + ", worst " + fmt("%.3f", ms) + " ms"};
}

Outcome deutsch() {
    struct Oracle {
        const char* name;
        int f0, f1;
    };
    bool ok = true;
    std::string detail;
    double worst_err = 0.0;
    double worst_time = 0.0;
    for (const Oracle o : {Oracle{"deutsch_const0", 0, 0}, Oracle{"deutsch_const1", 1, 1}, Oracle{"deutsch_id", 0, 1},
                           Oracle{"deutsch_not", 1, 0}}) {
        const Program p = corpus(o.name);
        const TwoLayerState s = run(p);
        const double s0 = o.f0 ? -1.0 : 1.0;
        const double s1 = o.f1 ? -1.0 : 1.0;
        // final row: ((-1)^f(0) + (-1)^f(1))/2 |0> + ((-1)^f(0) - (-1)^f(1))/2 |1>
        const double row_err = state_distance(s, make_state({"x"}, {{1.0, {(s0 + s1) / 2, (s0 - s1) / 2}}}));
        const Distribution d = output_distribution(s);
        const BasisIndex answer = o.f0 == o.f1 ? 0 : 1;
        const double dist_err = std::max(std::abs(d.probs[answer] - 1.0), std::abs(d.probs[1 - answer]));
        const double ms = worst_ms(o.name, [](const Program& q) { output_distribution(run(q)); });
        worst_err = std::max({worst_err, row_err, dist_err});
        worst_time = std::max(worst_time, ms);
        ok = ok && row_err <= kStateTol && dist_err <= kStateTol && ms < 10.0;
        detail += std::string(detail.empty() ? "" : ", ") + o.name + " -> {" + std::to_string(answer) + ":1}";
    }
    return {ok, detail + "; max err " + fmt("%.1e", worst_err) + ", worst " + fmt("%.3f", worst_time) + " ms"};
}

Outcome measurement_trace() {
    std::vector<TwoLayerState> steps;
    run(corpus("measure_example"), {[&](std::string_view, const TwoLayerState& s) { steps.push_back(s); }, true});
    const std::vector<std::string> x{"x"};
    const std::vector<TwoLayerState> expected{
        make_state(x, {{1.0, {1, 0}}}),
        make_state(x, {{1.0, {kInvSqrt2, kInvSqrt2}}}),
        make_state(x, {{0.5, {1, 0}}, {0.5, {0, 1}}}),
        make_state(x, {{0.5, {kInvSqrt2, kInvSqrt2}}, {0.5, {kInvSqrt2, -kInvSqrt2}}}),
        make_state(x, {{0.5, {1, 0}}, {0.5, {0, 1}}}),
    };
    if (steps.size() != expected.size()) return {false, "expected 5 states, got " + std::to_string(steps.size())};
    double worst = 0.0;
    for (size_t i = 0; i < steps.size(); ++i) worst = std::max(worst, state_distance(steps[i], expected[i]));
    return {worst <= kStateTol, "5 states, max err " + fmt("%.1e", worst) + ", branches evolve independently"};
}

Outcome classical_coin_copy() {
    const Distribution d = run_classical(corpus("fig2"));
    const double err = std::max({std::abs(d.probs[0] - 0.5), std::abs(d.probs[3] - 0.5), std::abs(d.probs[1]),
                                 std::abs(d.probs[2])});
    return {err <= 1e-12, "{00: 1/2, 11: 1/2} err " + fmt("%.1e", err)};
}

std::vector<CompStmt> comp_body(const Program& p) {
    std::vector<CompStmt> body;
    for (const Stmt& s : p.body) body.push_back(std::get<CompStmt>(s.node));
    return body;
}

Outcome reversibility() {
    constexpr std::uint64_t kSeed = 0xacce0005;
    testing::ProgramGenerator gen(kSeed);
    const auto t0 = Clock::now();
    double worst = 0.0;
    int invalid = 0;
    for (int i = 0; i < 500; ++i) {
        const Program p = gen.comp_program(1 + i % 6, 25);
        if (has_errors(validate(p))) ++invalid;
        const Eigen::MatrixXd m = comp_matrix(comp_body(p), Environment(p.inputs));
        worst = std::max(worst, (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff());
    }
    const double s = ms_since(t0) / 1000.0;
    return {worst <= 1e-10 && invalid == 0 && s < 60.0,
            "500 programs (seed 0xacce0005), max |M^T M - I| " +
                fmt("%.1e", worst) + ", " + fmt("%.2f", s) + " s"};
}

Outcome density_agreement() {
    constexpr std::uint64_t kSeed = 0xacce0006;
    testing::ProgramGenerator gen(kSeed);
    const auto t0 = Clock::now();
    double worst = 0.0;
    int with_measure = 0;
    int with_new = 0;
    int invalid = 0;
    for (int i = 0; i < 200; ++i) {
        const Program p = gen.full_program(5, 30);
        if (has_errors(validate(p))) ++invalid;
        bool m = false, n = false;
        for (const Stmt& s : p.body) {
            m = m || std::holds_alternative<MeasureStmt>(s.node);
            n = n || std::holds_alternative<NewStmt>(s.node);
        }
        with_measure += m;
        with_new += n;
        worst = std::max(worst, check_equivalence(p));
    }
    const double s = ms_since(t0) / 1000.0;
    return {worst <= 1e-10 && invalid == 0 && s < 60.0,
            "200 programs (seed 0xacce0006, " + std::to_string(with_measure) +
                " with measure, " + std::to_string(with_new) + " with new), max deviation " + fmt("%.1e", worst) +
                ", " + fmt("%.2f", s) + " s"};
}

Outcome universal_gates() {
    const Environment xyz({"x", "y", "z"});
    const Eigen::MatrixXd t =
        comp_matrix(std::vector<CompStmt>{make_xor("z", Expr::conj(Expr::var("x"), Expr::var("y")))}, xyz);
    Eigen::MatrixXd perm = Eigen::MatrixXd::Identity(8, 8);
    perm.row(6).swap(perm.row(7));
    const bool toffoli_exact = t == perm;

    const Eigen::MatrixXd h = comp_matrix(std::vector<CompStmt>{make_qrand("x")}, Environment({"x"}));
    Eigen::MatrixXd expected(2, 2);
    expected << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    const double h_err = (h - expected).cwiseAbs().maxCoeff();
    return {toffoli_exact && h_err <= 1e-15,
            std::string("Toffoli ") + (toffoli_exact ? "exact" : "MISMATCH") + ", Hadamard err " + fmt("%.1e", h_err)};
}

Outcome partial_measurement() {
    const TwoLayerState s = make_state({"x", "y"}, {{1.0, {0.5, 0.5, 0.5, 0.5}}});
    const std::vector<std::string> y{"y"};
    const TwoLayerState engine = apply_measure(s, y);
    const TwoLayerState oracle = testing::brute_force_measure(s, y);
    const TwoLayerState hand =
        make_state({"x", "y"}, {{0.5, {kInvSqrt2, 0, kInvSqrt2, 0}}, {0.5, {0, kInvSqrt2, 0, kInvSqrt2}}});
    const double err = std::max(state_distance(engine, oracle), state_distance(engine, hand));
    return {err <= 1e-12, "measure y on uniform 2-bit state vs brute force, err " + fmt("%.1e", err)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"quantum coin program: final state and trace rows, < 10 ms", quantum_coin},
        {"Deutsch with four inline oracles, < 10 ms each", deutsch},
        {"measure-then-interfere trace (five states)", measurement_trace},
        {"classical coin-copy distribution", classical_coin_copy},
        {"random Comp programs are orthogonal (reversibility)", reversibility},
        {"two-layer vs density semantics on random programs", density_agreement},
        {"Toffoli and Hadamard witnesses", universal_gates},
        {"partial measurement vs brute-force grouping", partial_measurement},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("[%s] %d. %s -- %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

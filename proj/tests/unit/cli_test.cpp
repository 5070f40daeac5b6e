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

#ifdef QPPL_CLI_PATH

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qppl/state.hpp"

namespace qppl {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qppl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    static std::string corpus(const std::string& name) { return std::string(QPPL_CORPUS_DIR) + "/" + name; }

    Result qppl(const std::string& args) {
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = std::string("'") + QPPL_CLI_PATH + "' " + args + " 2>'" + err.string() + "'";
        Result r;
        FILE* pipe = popen(cmd.c_str(), "r");
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
        const int status = pclose(pipe);
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.err = slurp(err);
        return r;
    }

    fs::path dir_;
};

TEST_F(Cli, DistributionOutput) {
    const Result deutsch = qppl("run " + corpus("deutsch_const0.qppl") + " --dist");
    EXPECT_EQ(deutsch.code, 0);
    EXPECT_EQ(deutsch.out, "0: 1.000000\n");
    const Result fig3 = qppl("run " + corpus("fig3.qppl") + " --dist");
    EXPECT_EQ(fig3.out, "x=1 y=1: 1.000000\n");
    const Result fig2 = qppl("run " + corpus("fig2.qppl") + " --dist");
    EXPECT_EQ(fig2.out, "x=0 y=0: 0.500000\nx=1 y=1: 0.500000\n");
}

TEST_F(Cli, ShotsFromADeterministicState) {
    const Result r = qppl("run " + corpus("fig3.qppl") + " --shots 100 --seed 7");
    EXPECT_EQ(r.code, 0);
    std::string expected;
    for (int i = 0; i < 100; ++i) expected += "11\n";
    EXPECT_EQ(r.out, expected);
}

TEST_F(Cli, ShotsOfAnEmptyResult) {
    const fs::path p = write("empty.qppl", "def main(x : bit):\n  qrand(x)\n  return\n");
    EXPECT_EQ(qppl("run " + p.string() + " --shots 3").out, "()\n()\n()\n");
}

TEST_F(Cli, ByteIdenticalAcrossRuns) {
    const std::string args = "run " + corpus("measure_example.qppl") + " --trace --dist --shots 50 --seed 99";
    const Result a = qppl(args);
    const Result b = qppl(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, qppl("run " + corpus("measure_example.qppl") + " --trace --dist --shots 50 --seed 98").out);
}

TEST_F(Cli, TraceMatchesGolden) {
    const Result r = qppl("run " + corpus("fig3.qppl") + " --trace");
    EXPECT_EQ(r.out, slurp(fs::path(QPPL_GOLDEN_DIR) / "fig3_trace.txt"));
}

TEST_F(Cli, BundledExamplesResolveByName) {
    EXPECT_EQ(qppl("run deutsch_id --dist").out, "1: 1.000000\n");
    const Result list = qppl("examples");
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("fig2               classical"), std::string::npos);
    EXPECT_NE(list.out.find("fig3               quantum"), std::string::npos);
    EXPECT_EQ(qppl("examples --show fig3").out, slurp(corpus("fig3.qppl")));
}

TEST_F(Cli, OracleDeviationOnCorpus) {
    for (const char* name : {"fig3", "deutsch_const0", "deutsch_const1", "deutsch_id", "deutsch_not",
                             "measure_example", "new_return"}) {
        const Result r = qppl(std::string("run ") + name + " --oracle");
        ASSERT_EQ(r.code, 0) << name << r.err;
        double deviation = 1.0;
        ASSERT_EQ(std::sscanf(r.out.c_str(), "oracle deviation: %lf", &deviation), 1) << r.out;
        EXPECT_LE(deviation, 1e-10) << name;
    }
}

TEST_F(Cli, DumpStateRoundTrips) {
    const fs::path out = dir_ / "state.json";
    EXPECT_EQ(qppl("run " + corpus("measure_example.qppl") + " --dump-state " + out.string()).code, 0);
    const TwoLayerState s = state_from_json(slurp(out));
    const TwoLayerState expected = testing::make_state({"x"}, {{0.5, {1, 0}}, {0.5, {0, 1}}});
    EXPECT_LE(testing::state_distance(s, expected), 1e-10);

    const fs::path classical = dir_ / "classical.json";
    EXPECT_EQ(qppl("run " + corpus("fig2.qppl") + " --dump-state " + classical.string()).code, 0);
    const TwoLayerState c = state_from_json(slurp(classical));
    EXPECT_EQ(c.branches.size(), 2U);
    EXPECT_TRUE(c.is_valid());
}

TEST_F(Cli, ValidationErrorsExitOne) {
    const fs::path p = write("bad.qppl", "def main(x : bit):\n  x ^= x\n");
    const Result r = qppl("run " + p.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(r.err, p.string() + ":2:3: error[XOR_SELF_REFERENCE]: 'x' appears on both sides of '^='; the update "
                                  "could not be undone\n");
    EXPECT_EQ(qppl("check " + p.string()).code, 1);
}

TEST_F(Cli, ParseErrorsExitOne) {
    const fs::path p = write("tabs.qppl", "def main(x : bit):\n\tqneg()\n");
    const Result r = qppl("check " + p.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind(p.string() + ":2:1: error[TAB_INDENT]:", 0), 0U) << r.err;
}

TEST_F(Cli, ModeMismatchExitsOne) {
    EXPECT_EQ(qppl("run " + corpus("fig2.qppl") + " --mode quantum").code, 1);
    const Result r = qppl("run " + corpus("fig3.qppl") + " --mode classical");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("QUANTUM_STATEMENT_IN_CLASSICAL_MODE"), std::string::npos);
}

TEST_F(Cli, CapacityErrorsExitTwo) {
    std::string text = "def main(";
    for (int i = 0; i <= kMaxLiveBits; ++i) text += (i ? ", v" : "v") + std::to_string(i);
    const fs::path p = write("big.qppl", text + " : bit):\n  qneg()\n");
    const Result r = qppl("run " + p.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("capacity"), std::string::npos);
}

TEST_F(Cli, CheckReportsWarningsButSucceeds) {
    const Result r = qppl("check " + corpus("new_return.qppl"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning[UNUSED_VARIABLE]"), std::string::npos);
    EXPECT_NE(r.out.find("ok (quantum)"), std::string::npos);
}

TEST_F(Cli, MissingFileExitsOne) { EXPECT_EQ(qppl("run " + (dir_ / "absent.qppl").string()).code, 1); }

} // namespace
} // namespace qppl

#endif // QPPL_CLI_PATH

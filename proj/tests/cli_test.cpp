// Copyright 2026 The qdistill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI through the shell; `env` is prefixed to the command line.
CliRun run(const std::string& args, const std::string& env = "", bool merge_stderr = false) {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + QDISTILL_CLI_PATH + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kDistill = "distill --css steane --code1 rep3 --code2 rep3 --target zero --p 1e-3:1e-2:log8 --trials 2e4 --seed 7";

}  // namespace

TEST(Cli, DistillEmitsOneRowPerGridPoint) {
    CliRun r = run(kDistill);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(count_lines(r.out), 9U);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p,trials,failures,rate,ci_low,ci_high");
    EXPECT_NE(r.out.find("\n0.001,20000,"), std::string::npos);
    EXPECT_NE(r.out.find("\n0.01,20000,"), std::string::npos);
}

TEST(Cli, SameSeedSameBytesForAnyThreadCount) {
    CliRun a = run(kDistill, "QDISTILL_THREADS=1");
    CliRun b = run(kDistill, "QDISTILL_THREADS=4");
    CliRun c = run(kDistill);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    CliRun other = run("distill --p 1e-3:1e-2:log8 --trials 2e4 --seed 8");
    EXPECT_NE(other.out, a.out);
}

TEST(Cli, ConfigurationErrorsExitWithOne) {
    CliRun empty = run("distill --p \"\"", "", true);
    EXPECT_EQ(empty.exit_code, 1);
    EXPECT_NE(empty.out.find("empty probability list"), std::string::npos);
    CliRun unknown = run("distill --code1 rep11 --p 0.01 --trials 10", "", true);
    EXPECT_EQ(unknown.exit_code, 1);
    EXPECT_NE(unknown.out.find("rep11"), std::string::npos);
    EXPECT_EQ(run("distill --p 0.01 --trials 0").exit_code, 1);
    EXPECT_EQ(run("distill --p 0.01 --trials 1.5").exit_code, 1);
    EXPECT_EQ(run("distill --p 1.2").exit_code, 1);
    EXPECT_EQ(run("distill --p 0.01 --target minus").exit_code, 1);
    EXPECT_EQ(run("distill --bogus").exit_code, 1);
    EXPECT_EQ(run("").exit_code, 1);
    EXPECT_EQ(run("fidelity --p 0.01 --catalog /nonexistent.json").exit_code, 1);
}

TEST(Cli, RuntimeErrorsExitWithTwo) {
    // The distilled curve stays below the reference on this grid.
    EXPECT_EQ(run("threshold --p 1e-3:2e-3:log2 --trials 2e4").exit_code, 2);
}

TEST(Cli, ExactFidelity) {
    CliRun r = run("fidelity --css steane --p 0.01 --exact --trials 5");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\n0.01,0,0,0.997995925032,"), std::string::npos);
}

TEST(Cli, FidelityWithSavingAndEffectiveMode) {
    CliRun r = run("fidelity --css steane --save rep3 --p 0.01 --trials 2e4");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(count_lines(r.out), 2U);
    CliRun e = run("fidelity --css steane --save rep5 --effective --p 0.005:0.02:log10 --trials 2e4");
    ASSERT_EQ(e.exit_code, 0);
    EXPECT_EQ(count_lines(e.out), 11U);
    EXPECT_NE(e.out.find("\n0.005,"), std::string::npos);
    EXPECT_EQ(run("fidelity --p 0.01 --effective").exit_code, 1);
}

TEST(Cli, OutWritesCsvAndSidecar) {
    const std::string path = ::testing::TempDir() + "qdistill_cli_out.csv";
    CliRun r = run(std::string(kDistill) + " --out " + path);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(read_file(path), run(kDistill).out);
    const std::string meta = read_file(::testing::TempDir() + "qdistill_cli_out.json");
    EXPECT_NE(meta.find("\"seed\""), std::string::npos);
    EXPECT_NE(meta.find("\"rep3\""), std::string::npos);
    EXPECT_EQ(meta.find("threads"), std::string::npos);
}

TEST(Cli, FlagsOverrideConfigFile) {
    const std::string path = ::testing::TempDir() + "qdistill_cli_config.json";
    {
        std::ofstream out(path);
        out << R"({"css": "steane", "code1": "rep3", "p": [0.001, 0.01], "trials": 20000, "seed": 7})";
    }
    CliRun from_file = run("distill --config " + path);
    ASSERT_EQ(from_file.exit_code, 0);
    EXPECT_EQ(count_lines(from_file.out), 3U);
    EXPECT_EQ(from_file.out, run("distill --p 0.001,0.01 --trials 20000 --seed 7").out);
    CliRun overridden = run("distill --config " + path + " --seed 8");
    EXPECT_EQ(overridden.out, run("distill --p 0.001,0.01 --trials 20000 --seed 8").out);
}

TEST(Cli, TraceCommand) {
    CliRun r = run("trace-example1");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"sigma\":\"001|1\""), std::string::npos);
    EXPECT_NE(r.out.find("\"residual\":\"clean\""), std::string::npos);
}

TEST(Cli, DumpCircuit) {
    CliRun r = run("dump-circuit --css steane");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.substr(0, 3), "CX ");
    CliRun prep = run("dump-circuit --css golay_q --prep plus");
    ASSERT_EQ(prep.exit_code, 0);
    EXPECT_NE(prep.out.find("P+ "), std::string::npos);
    EXPECT_NE(prep.out.find("P0 "), std::string::npos);
    EXPECT_EQ(run("dump-circuit --css nothing").exit_code, 1);
}

TEST(Cli, CatalogCommandIncludesLoadedEntries) {
    const std::string path = ::testing::TempDir() + "qdistill_cli_catalog.json";
    {
        std::ofstream out(path);
        out << R"([{"name": "rep3b", "type": "classical", "H": [[1,1,0],[1,0,1]]}])";
    }
    CliRun r = run("catalog --catalog " + path);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"rep3b\""), std::string::npos);
    EXPECT_NE(r.out.find("\"golay_q\""), std::string::npos);
    CliRun d = run("distill --catalog " + path + " --code1 rep3b --p 0.01 --trials 1000");
    EXPECT_EQ(d.exit_code, 0);
}

TEST(Cli, ThresholdAndCrossover) {
    CliRun t = run("threshold --code1 rep3 --p 3e-3:5e-2:log8 --trials 2e4");
    ASSERT_EQ(t.exit_code, 0);
    EXPECT_NE(t.out.find("\"p_th\""), std::string::npos);
    CliRun c = run("crossover --css steane --save rep3 --p 0.002:0.02 --points 6 --trials 2e4");
    ASSERT_EQ(c.exit_code, 0);
    EXPECT_NE(c.out.find("\"status\":\"no_gain\""), std::string::npos);
}

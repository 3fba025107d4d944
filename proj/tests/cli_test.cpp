// Copyright 2026 The ctxkit Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

const std::string cli = CTXKIT_CLI;
const std::string data_dir = CTXKIT_TEST_DATA;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliRun run(const std::string &args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / ("ctxkit-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter));
    fs::path err = dir / ("err" + std::to_string(counter++));
    std::string cmd = "'" + cli + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
    int status = std::system(cmd.c_str());
    CliRun r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
    fs::remove(out);
    fs::remove(err);
    return r;
}

bool contains(const std::string &text, const std::string &needle) {
    return text.find(needle) != std::string::npos;
}

TEST(Cli, CheckUniformState) {
    CliRun r = run("check --scenario yu-oh --state 1,1,1");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "verdict: contextual"));
    EXPECT_TRUE(contains(r.out, "witness: vA"));
}

TEST(Cli, CheckNonContextualDensity) {
    CliRun r = run("check --scenario yu-oh --density '" + data_dir + "/mixed.density'");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "verdict: not contextual"));
    EXPECT_TRUE(contains(r.out, "noncontextual model exists: yes"));
}

TEST(Cli, ContextsOfScenarioFile) {
    CliRun r = run("contexts --scenario '" + data_dir + "/collision.scenario'");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "complements distinct: no"));
    EXPECT_TRUE(contains(r.out, "collision {a,b} {c,d}"));
}

TEST(Cli, AssignmentsJson) {
    CliRun r = run("assignments --scenario yu-oh --format json");
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["assignments"]["rows"].size(), 24u);
    EXPECT_EQ(doc["assignments"]["rows"][1]["support"], nlohmann::json::array({"v1", "v5", "v6", "vA"}));
    EXPECT_EQ(doc["event_lists"]["vA"].size(), 3u);
}

TEST(Cli, ParadoxesForState) {
    CliRun r = run("paradoxes --scenario yu-oh --state=-1,1,1");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "paradoxes (3)"));
    EXPECT_TRUE(contains(r.out, "[published (4)]"));
}

TEST(Cli, SimulateEvent) {
    CliRun r = run("simulate --scenario yu-oh --state 1,1,1 --event vA --shots 100000 --seed 0");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "vA=1: count 11196, frequency 0.111960"));
}

TEST(Cli, SimulateParadoxObservable) {
    CliRun r = run("simulate --scenario yu-oh --state 1,1,1 --paradox 1 --shots 1000");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "a3=3: count 1000"));
}

TEST(Cli, OutputFile) {
    fs::path out = fs::temp_directory_path() / ("ctxkit-out-" + std::to_string(::getpid()) + ".txt");
    CliRun r = run("contexts --scenario yu-oh --out '" + out.string() + "'");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_TRUE(contains(slurp(out), "contexts (16: 4 basis, 12 deficient)"));
    fs::remove(out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("contexts --scenario '" + data_dir + "/absent.scenario'").code, 5);
    CliRun parse = run("contexts --scenario '" + data_dir + "/malformed.scenario'");
    EXPECT_EQ(parse.code, 2);
    EXPECT_TRUE(contains(parse.err, "line 17, column 9"));
    EXPECT_EQ(run("check --scenario yu-oh --state 0,0,0").code, 3);
    EXPECT_EQ(run("check --scenario yu-oh --state 1,1").code, 3);
    EXPECT_EQ(run("check --scenario yu-oh --state 1,y,1").code, 2);
    EXPECT_EQ(run("simulate --scenario yu-oh --state 1,1,1 --event vZ").code, 4);
    EXPECT_EQ(run("simulate --scenario yu-oh --state 1,1,1").code, 3);
    EXPECT_EQ(run("simulate --scenario yu-oh --state 1,1,1 --event vA --shots 0").code, 3);
    EXPECT_EQ(run("simulate --scenario yu-oh --state 1,1,1 --paradox 9").code, 3);
    EXPECT_EQ(run("contexts --scenario '" + data_dir + "/zero-ray.scenario'").code, 3);
    EXPECT_EQ(run("frobnicate --scenario yu-oh").code, 1);
    EXPECT_EQ(run("contexts").code, 1);
    EXPECT_EQ(run("contexts --scenario yu-oh --format xml").code, 1);
    CliRun usage = run("");
    EXPECT_EQ(usage.code, 1);
    EXPECT_EQ(std::count(usage.err.begin(), usage.err.end(), '\n'), 1);
}

TEST(Cli, HelpListsExitCodes) {
    CliRun r = run("--help");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "Exit codes"));
}

TEST(Cli, ReportJsonIsByteIdentical) {
    CliRun a = run("report --scenario yu-oh --format json --seed 0 --shots 2000");
    CliRun b = run("report --scenario yu-oh --format json --seed 0 --shots 2000");
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["schema"], "ctxkit.report/1");
    EXPECT_EQ(doc["paradoxes"].size(), 12u);
}

}  // namespace

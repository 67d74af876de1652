// Copyright 2026 The codedepth Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "codedepth/circuit.h"
#include "codedepth/codes.h"
#include "codedepth/dense.h"
#include "codedepth/json_util.h"

using namespace codedepth;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string &name) {
    std::ifstream in(std::string(CODEDEPTH_GOLDEN_DIR) + "/" + name, std::ios::binary);
    EXPECT_TRUE(in.good()) << name;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("codedepth_cli_" + name);
}

}  // namespace

TEST(cli, golden_outputs) {
    struct Case {
        std::vector<std::string> args;
        std::string file;
    };
    std::vector<Case> cases = {
        {{"code", "params", "--builtin", "five_qubit"}, "code_params_five_qubit.json"},
        {{"code", "params", "--builtin", "toric3", "--format", "csv"}, "code_params_toric3.csv"},
        {{"bounds", "eval", "--n", "1024", "--k", "512", "--d", "32", "--l", "4", "--eps", "0.01", "--delta", "0.1",
          "--t", "1", "--f", "0.5"},
         "bounds_eval.json"},
        {{"bounds", "eval", "--regime", "0.5", "--format", "csv"}, "bounds_regime.csv"},
        {{"frontier", "--builtin", "toric3", "--t-max", "1", "--budget", "40", "--format", "csv"}, "frontier_toric3.csv"},
        {{"syndrome", "build", "--builtin", "steane7", "--format", "csv"}, "syndrome_steane7.csv"},
        {{"ham", "energy", "--builtin", "five_qubit", "--state", "code", "--format", "csv"}, "ham_energy_code.csv"},
    };
    for (const auto &c : cases) {
        auto r = run(c.args);
        EXPECT_EQ(r.code, 0) << c.file << "\n" << r.err;
        EXPECT_EQ(r.out, golden(c.file)) << c.file;
    }
}

TEST(cli, unknown_builtin_lists_names) {
    auto r = run({"code", "params", "--builtin", "nope"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    for (const auto &name : builtin_code_names()) {
        EXPECT_NE(r.err.find(name), std::string::npos) << name;
    }
}

TEST(cli, usage_errors_exit_2) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"code", "params", "--builtin", "five_qubit", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"code", "params"}).code, 2);
    EXPECT_EQ(run({"code", "params", "--code", "/nonexistent/code.json"}).code, 2);
    EXPECT_EQ(run({"bounds", "eval", "--eps", "1.5"}).code, 2);
    EXPECT_EQ(run({"bounds", "eval", "--delta", "0.7"}).code, 2);
    EXPECT_EQ(run({"bounds", "suite"}).code, 2);
    EXPECT_EQ(run({"bounds", "suite", "--only", "nothing"}).code, 2);
    EXPECT_EQ(run({"frontier", "--builtin", "toric3", "--strategy", "annealing"}).code, 2);
    EXPECT_EQ(run({"frontier", "--builtin", "toric3", "--budget", "0"}).code, 2);
    EXPECT_EQ(run({"circuit", "lightcone", "--circuit", "/nonexistent", "--region", "0"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli, malformed_code_file) {
    auto path = temp_path("bad.json");
    {
        std::ofstream(path) << "{\"n\": 3, \"checks\": [\"ZZ\"";
    }
    auto r = run({"code", "params", "--code", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(cli, code_file_round_trip) {
    auto path = temp_path("steane.json");
    {
        std::ofstream(path) << code_to_json(steane_code());
    }
    auto r = run({"code", "params", "--code", path.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("[[7,1,3]]"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(cli, repeat_runs_are_byte_identical) {
    std::vector<std::vector<std::string>> commands = {
        {"frontier", "--builtin", "five_qubit", "--t-max", "2", "--budget", "30", "--seed", "7"},
        {"amplify", "check", "--builtin", "five_qubit", "--samples", "4", "--seed", "3"},
        {"sparsify", "--builtin", "five_qubit", "--seed", "11"},
        {"syndrome", "decohere", "--builtin", "five_qubit", "--state", "random", "--seed", "5"},
    };
    for (const auto &args : commands) {
        auto a = run(args);
        auto b = run(args);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
        EXPECT_NE(a.err.find("seed: "), std::string::npos);
    }
    auto c = run({"frontier", "--builtin", "five_qubit", "--t-max", "2", "--budget", "30", "--seed", "8", "--raw"});
    EXPECT_EQ(c.code, 0);
}

TEST(cli, output_file_written_atomically) {
    auto path = temp_path("params.json");
    std::filesystem::remove(path);
    auto r = run({"code", "params", "--builtin", "five_qubit", "--output", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), golden("code_params_five_qubit.json"));
    EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
}

TEST(cli, lightcone_command) {
    auto path = temp_path("circuit.json");
    {
        std::ofstream(path) << random_low_depth(6, 2, GateFamily::Clifford, 4).to_json();
    }
    auto r = run({"circuit", "lightcone", "--circuit", path.string(), "--region", "0"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_LE(j["size"].get<size_t>(), 4u);
    EXPECT_EQ(run({"circuit", "lightcone", "--circuit", path.string(), "--region", "9"}).code, 2);
    EXPECT_EQ(run({"circuit", "lightcone", "--circuit", path.string(), "--region", "a"}).code, 2);
    std::filesystem::remove(path);
}

TEST(cli, dense_limits_flag) {
    auto saved = DenseLimits::get();
    auto r = run({"--dense-limits", "4,4,4", "entropy", "audit", "--builtin", "five_qubit"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    DenseLimits::set(saved);
    EXPECT_EQ(run({"--dense-limits", "x,y", "code", "params", "--builtin", "five_qubit"}).code, 2);
    DenseLimits::set(saved);
}

TEST(cli, suite_subset_and_json) {
    auto r = run({"bounds", "suite", "--only", "kls_grid,bound_regime", "--seed", "2"});
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["all_passed"].get<bool>());
    EXPECT_EQ(j["checks"].size(), 2u);
    EXPECT_EQ(r.err, "seed: 2\n");
}

TEST(cli, bounds_eval_regime_json) {
    auto r = run({"bounds", "eval", "--regime", "0.3"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["points"].size(), 11u);
    for (const auto &p : j["points"]) {
        EXPECT_TRUE(p["within"].get<bool>());
    }
}

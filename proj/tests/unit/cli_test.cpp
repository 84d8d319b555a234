/*
   Copyright 2026 The oretower Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace ore {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "ore");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ORE_TEST_DATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

TEST(Cli, DeformQuantumPlane) {
    const Result r = run({"deform", "corpus:qplane", "--n", "3", "--q", "3"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_TRUE(contains(r.out, "x2*x1 - 3*x1*x2 = 0"));
    EXPECT_TRUE(contains(r.out, "x3*x1 - 3*x1*x3 = 0"));
    EXPECT_TRUE(contains(r.out, "x3*x2 - 3*x2*x3 = 0"));
}

TEST(Cli, LimitWeylJson) {
    const Result r = run({"--json", "limit", "corpus:weyl", "--k", "2"});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["names"].size(), 4u);
    EXPECT_EQ(j["p"][1][0], "1");
    EXPECT_EQ(j["p"][3][2], "1");
    EXPECT_EQ(j["p"][2][1], "0");
    EXPECT_EQ(j["c"][3][0], "0");
}

TEST(Cli, ValidateBrokenTower) {
    const Result r = run({"validate", data("broken_tower.ore")});
    EXPECT_EQ(r.code, cli::kValidationFailure);
    EXPECT_TRUE(contains(r.out, "ENDO2 (3,2,1)"));
    const Result j = run({"--json", "validate", data("broken_tower.ore")});
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_FALSE(doc["ok"].get<bool>());
    EXPECT_EQ(doc["failures"][0]["kind"], "ENDO2");
    EXPECT_EQ(doc["failures"][0]["indices"], nlohmann::json::parse("[3,2,1]"));
}

TEST(Cli, DiamondBrokenTower) {
    const Result r = run({"diamond", data("broken_tower.ore")});
    EXPECT_EQ(r.code, cli::kValidationFailure);
    EXPECT_TRUE(contains(r.out, "DIAMOND (3,2,1)"));
}

TEST(Cli, NormalForm) {
    const Result r = run({"nf", "corpus:weyl", "-e", "x2*x1"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "x1*x2 + (t - 1)\n");
}

TEST(Cli, Multiply) {
    const Result r = run({"mul", "corpus:uqsl2", "-e", "F", "-e", "E"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "E*F - (1/4)*(t - t^-1)*K + (1/4)*(t - t^-1)*H\n");
}

TEST(Cli, Central) {
    EXPECT_EQ(run({"central", "corpus:uqsl2", "-e", "H*K - 1"}).out, "true\n");
    const Result r = run({"central", "corpus:weyl", "-e", "x1"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "false\n");
}

TEST(Cli, Jacobi) {
    EXPECT_EQ(run({"jacobi", data("psl2.ore")}).code, cli::kOk);
    EXPECT_EQ(run({"jacobi", "corpus:pmmo"}).code, cli::kOk);
}

TEST(Cli, Potential) {
    const Result r = run({"--json", "potential", data("mmo_potential.ore")});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["matches"].get<bool>());
    EXPECT_EQ(j["lambda"], "-2");
    EXPECT_EQ(j["f2"], "2*x1");
}

TEST(Cli, QuantizeAffineFails) {
    const Result r = run({"quantize", data("psl2.ore"), "--strategy", "affine"});
    EXPECT_EQ(r.code, cli::kValidationFailure);
    EXPECT_TRUE(contains(r.out, "ENDO2 (4,3,1)"));
}

TEST(Cli, QuantizeWithOverride) {
    const Result r = run({"quantize", data("psl2.ore"), "--strategy", "power", "--override",
                          "F E = E F + (1/4)*(t - t^-1)*(H - K)"});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "rel F E = 1 * E F - (1/4)*(t - t^-1)*K + (1/4)*(t - t^-1)*H"));
}

TEST(Cli, CorpusEmit) {
    const Result r = run({"corpus", "weyl", "--k", "2", "--emit"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_TRUE(contains(r.out, "rel x2 x1 = 1 * x1 x2 + (t - 1)"));
    EXPECT_TRUE(contains(r.out, "rel x4 x3 = 1 * x3 x4 + (t - 1)"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"validate", "corpus:nope"}).code, cli::kArithmeticError);
    EXPECT_EQ(run({"deform", "corpus:trigweyl", "--q", "2"}).code, cli::kArithmeticError);
    EXPECT_EQ(run({"deform", "corpus:uqsl2", "--q", "0"}).code, cli::kArithmeticError);
    EXPECT_EQ(run({"nf", "corpus:weyl", "-e", "x1 +"}).code, cli::kParseError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);
    EXPECT_EQ(run({"validate", data("does_not_exist.ore")}).code, cli::kParseError);
}

TEST(Cli, PrecisionFlag) {
    const Result r = run({"--prec", "4", "corpus", "trigweyl", "--emit"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_TRUE(contains(r.out, "coeff series prec=4"));
}

TEST(Cli, PrecisionEnvironment) {
    ::setenv("ORE_PREC", "5", 1);
    const Result r = run({"corpus", "trigweyl", "--emit"});
    ::unsetenv("ORE_PREC");
    EXPECT_TRUE(contains(r.out, "coeff series prec=5"));
}

TEST(Cli, QuantizeExpUsesSeriesPrecision) {
    const Result r = run({"--prec", "4", "quantize", "corpus:pweyl", "--strategy", "exp"});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(contains(r.out, "coeff series prec=4"));
    EXPECT_TRUE(contains(r.out, "rel x2 x1 = 1 * x1 x2 + (t - 1)"));
}

TEST(Cli, JsonIsStable) {
    const std::vector<std::string> args = {"--json", "diamond", "corpus:qmat2"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> q = {"--json", "quantize", "corpus:pmat2"};
    EXPECT_EQ(run(q).out, run(q).out);
}

TEST(Cli, DeformJson) {
    const Result r = run({"--json", "deform", "corpus:qmat2", "--q", "2"});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& rel : j["relations"]) {
        if (rel["j"] == 4 && rel["i"] == 3) {
            EXPECT_EQ(rel["u"], "-(3/2)*y*z");
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

}  // namespace
}  // namespace ore

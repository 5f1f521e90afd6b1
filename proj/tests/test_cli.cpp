#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "rsperm/cli/cli.hpp"

using namespace rsperm::cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(CliAffine, F13Set) {
    const auto r = run_cli({"affine", "--field", "13", "--points", "0,1,4,6"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_TRUE(has(r.out, "affine permutations of A: 3"));
    EXPECT_TRUE(has(r.out, "3*x + 1"));
    EXPECT_TRUE(has(r.out, "9*x + 4"));

    const auto j = json::parse(run_cli({"affine", "--field", "13", "--points", "0,1,4,6", "--json"}).out);
    std::vector<std::string> polys;
    for (const auto& m : j.at("maps")) polys.push_back(m.at("poly"));
    EXPECT_EQ(polys, (std::vector<std::string>{"x", "3*x + 1", "9*x + 4"}));
}

TEST(CliAffine, FullFieldHasQTimesQMinusOneMaps) {
    const auto r = run_cli({"affine", "--field", "5", "--points", "0,1,2,3,4", "--json"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(json::parse(r.out).at("order"), 20);
}

TEST(CliAffine, InvalidInput) {
    EXPECT_EQ(run_cli({"affine", "--field", "13", "--points", "0,1,1,6"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"affine", "--field", "12", "--points", "0,1"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"affine", "--field", "13", "--points", "0,13"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"affine", "--field", "13"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"affine", "--points", "0,1"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"affine", "--field", "9", "--modulus", "2,0,1", "--points", "[0,0],[1,0]"}).code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"affine", "--field", "27", "--modulus", "2,2,1", "--points", "[0,0],[1,0]"}).code,
              kInvalidInput);
}

TEST(CliAffine, ExtensionModulus) {
    const auto r = run_cli({"affine", "--field", "9", "--modulus", "2,2,1", "--points",
                            "[0,0],[1,0],[2,0],[1,1],[2,2]", "--json"});
    EXPECT_EQ(r.code, kOk);
    const auto j = json::parse(r.out);
    EXPECT_GE(j.at("order"), 1);
    EXPECT_EQ(j.at("maps")[0].at("poly"), "x");
}

TEST(CliGroup, F13Orders) {
    const auto r3 = run_cli({"group", "--field", "13", "--points", "0,1,4,6", "--k", "3"});
    EXPECT_EQ(r3.code, kOk);
    EXPECT_TRUE(has(r3.out, "order 6 (non-abelian, S_3)"));

    const auto j1 = json::parse(run_cli({"group", "--field", "13", "--points", "0,1,4,6", "--k", "1", "--json"}).out);
    EXPECT_EQ(j1.at("order"), 24);
    const auto j2 = json::parse(run_cli({"group", "--field", "13", "--points", "0,1,4,6", "--k", "2", "--json"}).out);
    EXPECT_EQ(j2.at("order"), 3);
    EXPECT_EQ(j2.at("equal"), true);
}

TEST(CliGroup, Limits) {
    EXPECT_EQ(run_cli({"group", "--field", "13", "--points", "0,1,4,6", "--k", "0"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"group", "--field", "13", "--points", "0,1,4,6", "--k", "5"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"group", "--field", "13", "--points", "0,1,4,6", "--k", "2", "--max-n", "3"}).code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"group", "--field", "13", "--points", "0,1,2,3,4,5,6,7,8,9,10", "--k", "3"}).code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"group", "--field", "13", "--points", "0,1,4,6"}).code, kInvalidInput);
}

TEST(CliGroup, SearchModesAgree) {
    const std::vector<std::string> base{"group", "--field", "7", "--points", "0,1,2,3,4,5", "--k", "2", "--json"};
    auto back = base;
    back.insert(back.end(), {"--search", "backtrack", "--threads", "2"});
    EXPECT_EQ(run_cli(base).out, run_cli(back).out);
}

TEST(CliVerify, Examples) {
    const auto r2 = run_cli({"verify", "--field", "13", "--points", "0,1,4,6", "--k", "2"});
    EXPECT_EQ(r2.code, kOk);
    EXPECT_TRUE(has(r2.out, "groups equal: yes"));
    EXPECT_TRUE(has(r2.out, "VERIFIED"));

    const auto r3 = run_cli({"verify", "--field", "13", "--points", "0,1,4,6", "--k", "3"});
    EXPECT_EQ(r3.code, kOk);
    EXPECT_TRUE(has(r3.out, "warning:"));
    EXPECT_TRUE(has(r3.out, "groups equal: no"));

    const auto r7 = run_cli({"verify", "--field", "7", "--points", "0,1,2,3,4,5,6", "--k", "3", "--json"});
    EXPECT_EQ(r7.code, kOk);
    const auto j = json::parse(r7.out);
    EXPECT_EQ(j.at("order"), 42);
    EXPECT_EQ(j.at("affine_order"), 42);
    EXPECT_EQ(j.at("equal"), true);
}

TEST(CliSweep, DeterministicAndTallied) {
    const std::vector<std::string> args{"sweep", "--seed", "42", "--trials", "12"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(has(a.out, "sweep rng=mt19937_64 seed=42 trials=12"));
    EXPECT_TRUE(has(a.out, "passed 12/12"));
}

TEST(CliSweep, ZeroTrials) {
    const auto r = run_cli({"sweep", "--trials", "0"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_TRUE(has(r.out, "passed 0/0"));
    const auto j = json::parse(run_cli({"sweep", "--trials", "0", "--json"}).out);
    EXPECT_TRUE(j.at("instances").empty());
}

TEST(CliWorkedExamples, AllPass) {
    const auto r = run_cli({"paper-examples"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_FALSE(has(r.out, "FAIL"));
    const auto j = json::parse(run_cli({"paper-examples", "--json"}).out);
    EXPECT_EQ(j.at("passed"), true);
    EXPECT_EQ(j.at("examples").size(), 2u);
    for (const auto& ex : run_paper_examples()) {
        EXPECT_TRUE(ex.passed()) << ex.title;
        for (const auto& c : ex.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.actual;
    }
}

TEST(CliHelp, ExitsZero) {
    EXPECT_EQ(run_cli({"--help"}).code, kOk);
    EXPECT_EQ(run_cli({"group", "--help"}).code, kOk);
}

TEST(CliPoints, SplitRespectsBrackets) {
    EXPECT_EQ(split_points("[0,1],[2,2],3"), (std::vector<std::string>{"[0,1]", "[2,2]", "3"}));
    EXPECT_THROW(split_points("[0,1"), std::invalid_argument);
    EXPECT_THROW(split_points("0,1]"), std::invalid_argument);
}

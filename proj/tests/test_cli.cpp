#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "motive/cli.hpp"
#include "motive/serialization.hpp"

using motive::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

} // namespace

TEST(CliMotive, Expansion) {
    const Result r = invoke({"motive", "bo", "3", "--expand", "9"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2U);
    EXPECT_EQ(ls.back(), "L^-3 + L^-5 + L^-7 + O(L^-9)");
}

TEST(CliMotive, DisplayAndEval) {
    EXPECT_EQ(invoke({"motive", "quad", "2", "2"}).out, "L^3 - L^2\n");
    EXPECT_EQ(lines(invoke({"motive", "so", "3", "--eval", "3"}).out).back(), "24");
    EXPECT_EQ(lines(invoke({"motive", "bo", "3", "--eval", "3"}).out).back(), "1/24");
    EXPECT_EQ(lines(invoke({"motive", "bo", "3", "--eval=1/2"}).out).back(), "-8/3");
}

TEST(CliMotive, Errors) {
    EXPECT_EQ(invoke({"motive", "bo", "3", "--eval", "1"}).code, 1);
    EXPECT_EQ(invoke({"motive", "bso", "4"}).code, 1);
    EXPECT_EQ(invoke({"motive", "spin", "3"}).code, 1);
    EXPECT_EQ(invoke({"motive", "quad", "2", "3"}).code, 1);
    EXPECT_EQ(invoke({"motive", "bo", "3", "--expand", "0"}).code, 1);
    EXPECT_EQ(invoke({"motive", "bo", "3", "--format", "csv"}).code, 1);
    EXPECT_EQ(invoke({"motive", "bo", "3", "--eval", "x"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliMotive, JsonRoundTrip) {
    const Result r = invoke({"motive", "bo", "4", "--expand", "12", "--eval", "5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["name"]["kind"], "bo");
    EXPECT_EQ(j["name"]["params"], nlohmann::json::array({4}));
    const auto cls = motive::motive_from_json(j["class"]);
    EXPECT_EQ(cls.to_string(), j["display"].get<std::string>());
    EXPECT_EQ(j["expansion"]["depth"], 12);
    EXPECT_EQ(j["eval"]["at"], "5");
    EXPECT_EQ(cls.evaluate(5).get_str(), j["eval"]["value"].get<std::string>());
}

TEST(CliMotive, Deterministic) {
    const std::vector<std::string> args{"motive", "bo", "6", "--expand", "30", "--format", "json"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliVerify, Targets) {
    EXPECT_EQ(invoke({"verify", "recurrence", "--n-max", "30"}).code, 0);
    EXPECT_EQ(invoke({"verify", "decomposition", "--n-max", "10"}).code, 0);
    EXPECT_EQ(invoke({"verify", "theorem", "--n-max", "10"}).code, 0);
    EXPECT_EQ(invoke({"verify", "gfun", "--order-x", "16"}).code, 0);
    EXPECT_EQ(invoke({"verify", "closed-form", "--order-x", "6", "--order-L", "10"}).code, 0);
    EXPECT_EQ(invoke({"verify", "exp-product", "--order-x", "6", "--order-L", "10"}).code, 0);
    EXPECT_EQ(invoke({"verify", "euler", "--order-x", "6", "--order-L", "10"}).code, 0);
    EXPECT_EQ(invoke({"verify", "census", "--q", "3", "--n-max", "4"}).code, 0);
    EXPECT_EQ(invoke({"verify", "stack-count", "--q", "3", "--n-max", "3"}).code, 0);
    EXPECT_EQ(invoke({"verify", "nonsense"}).code, 1);
    EXPECT_EQ(invoke({"verify", "census", "--q", "9"}).code, 1);
}

TEST(CliVerify, TextAndJson) {
    const Result text = invoke({"verify", "census", "--q", "3", "--n", "2"});
    ASSERT_EQ(text.code, 0);
    EXPECT_EQ(text.out.rfind("PASS", 0), 0U);

    const Result js = invoke({"verify", "census", "--q", "3", "--n", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    EXPECT_EQ(j["pass"], true);
    ASSERT_EQ(j["checks"].size(), 1U);
    EXPECT_EQ(j["checks"][0]["rows"][1]["count"], "8");
}

TEST(CliVerify, BudgetExceeded) {
    const Result r = invoke({"verify", "census", "--q", "3", "--n", "4", "--budget", "1000", "--format", "json"});
    EXPECT_EQ(r.code, 3);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["error"], "budget_exceeded");
    EXPECT_EQ(j["required"], "59049");
    EXPECT_EQ(j["budget"], "1000");
    EXPECT_EQ(invoke({"verify", "census", "--q", "3", "--n", "2", "--budget", "0"}).code, 1);
}

TEST(CliTable, QuadCensusCsv) {
    const Result r = invoke({"table", "quad-census", "--q", "3", "--n-max", "2", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 7U);
    EXPECT_EQ(ls[0], "q,n,r,count,formula_value,match");
    EXPECT_EQ(ls[6], "3,2,2,18,18,true");
    EXPECT_EQ(invoke({"table", "quad-census", "--q", "2"}).code, 1);
    EXPECT_EQ(invoke({"table", "motive-values", "--q", "5", "--format", "json"}).code, 0);
    EXPECT_EQ(invoke({"table", "bogus"}).code, 1);
}

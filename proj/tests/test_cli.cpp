#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyl2dom/cli.hpp"

using namespace cyl2dom;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cyl2dom");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::cmd_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cyl2dom_test_" + name);
}

}  // namespace

TEST(Cli, WordsCount) {
    const auto r = run({"words", "count"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "111\n");
}

TEST(Cli, WordsListFormats) {
    const auto j = run({"words", "list", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    const auto arr = json::parse(j.out);
    ASSERT_EQ(arr.size(), 111u);
    EXPECT_EQ(arr[0]["word"], "00000");
    const auto csv = run({"words", "list", "--format", "csv"});
    EXPECT_EQ(csv.out.rfind("index,word\n0,00000\n", 0), 0u);
    EXPECT_EQ(run({"words", "list", "--format", "xml"}).code, 1);
}

TEST(Cli, Omega2) {
    EXPECT_EQ(run({"omega2", "--n", "16"}).out, "33\n");
    const auto j = json::parse(run({"omega2", "--n", "19", "--format", "json"}).out);
    EXPECT_EQ(j["omega2"], 39);
    const auto range = json::parse(run({"omega2", "--range", "44..46", "--format", "json"}).out);
    ASSERT_EQ(range.size(), 3u);
    EXPECT_EQ(range[1]["omega2"], 90);
    EXPECT_EQ(run({"omega2", "--n", "15"}).code, 1);
    EXPECT_EQ(run({"omega2", "--range", "20..10"}).code, 1);
    EXPECT_EQ(run({"omega2"}).code, 1);
}

TEST(Cli, Bound) {
    const auto j = json::parse(run({"bound", "--m", "13", "--n", "16", "--format", "json"}).out);
    EXPECT_EQ(j["lower_rational"], "241/3");
    EXPECT_EQ(j["lower"], 81);
    EXPECT_TRUE(j["exact"].is_null());
    EXPECT_EQ(j["status"], "lower_bound_only");
    const auto e = json::parse(run({"bound", "--m", "13", "--n", "18", "--format", "json"}).out);
    EXPECT_EQ(e["exact"], 90);
    EXPECT_EQ(e["status"], "exact");
    EXPECT_EQ(run({"bound", "--m", "13"}).code, 1);
}

TEST(Cli, ConstructAndVerify) {
    const auto c = run({"construct", "--m", "14", "--n", "21"});
    ASSERT_EQ(c.code, 0);
    const auto path = temp_path("construct.json");
    std::ofstream(path) << c.out;
    const auto v = run({"verify", "--set", path.string(), "--format", "json"});
    EXPECT_EQ(v.code, 0);
    const auto j = json::parse(v.out);
    EXPECT_EQ(j["valid"], true);
    EXPECT_EQ(j["size"], 112);
    EXPECT_EQ(j["two_dominating"], true);

    auto set = json::parse(c.out);
    set["members"] = json::array({json::array({1, 1})});
    std::ofstream(path) << set.dump();
    EXPECT_EQ(run({"verify", "--set", path.string()}).code, 2);
    std::filesystem::remove(path);

    EXPECT_EQ(run({"verify", "--set", "/nonexistent/file.json"}).code, 1);
    EXPECT_EQ(run({"construct", "--m", "13", "--n", "16"}).code, 1);
    const auto g = run({"construct", "--m", "13", "--n", "18", "--format", "grid"});
    EXPECT_EQ(std::count(g.out.begin(), g.out.end(), '\n'), 13);
}

TEST(Cli, VerifyBorderSet) {
    const auto o = run({"oracle", "omega2", "--n", "16", "--witness"});
    ASSERT_EQ(o.code, 0);
    std::istringstream lines(o.out);
    std::string value, witness;
    std::getline(lines, value);
    std::getline(lines, witness);
    EXPECT_EQ(value, "33");
    const auto path = temp_path("border.json");
    std::ofstream(path) << witness;
    const auto j = json::parse(run({"verify", "--set", path.string(), "--format", "json"}).out);
    EXPECT_EQ(j["border_two_dominating"], true);
    EXPECT_EQ(j["wasted"], 33);
    std::filesystem::remove(path);
}

TEST(Cli, MatrixDumpLoad) {
    const auto path = temp_path("matrix.csv");
    ASSERT_EQ(run({"matrix", "dump", "--out", path.string()}).code, 0);
    const auto j = json::parse(run({"matrix", "load", "--file", path.string(), "--format", "json"}).out);
    EXPECT_EQ(j["order"], 111);
    EXPECT_EQ(j["equals_transfer_matrix"], true);
    std::ofstream(path) << "order=2\n1,2\n";
    EXPECT_EQ(run({"matrix", "load", "--file", path.string()}).code, 1);
    std::filesystem::remove(path);
}

TEST(Cli, Periodicity) {
    const auto prefix = temp_path("per").string();
    const auto r = run({"periodicity", "--format", "json", "--out-prefix", prefix});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["n0"], 45);
    EXPECT_EQ(j["a"], 1);
    EXPECT_EQ(j["b"], 2);
    EXPECT_TRUE(std::filesystem::exists(prefix + "_n0.csv"));
    EXPECT_TRUE(std::filesystem::exists(prefix + "_n0_plus_a.csv"));
    std::filesystem::remove(prefix + "_n0.csv");
    std::filesystem::remove(prefix + "_n0_plus_a.csv");
    EXPECT_EQ(run({"periodicity", "--max-exponent", "40"}).code, 3);
}

TEST(Cli, Oracle) {
    EXPECT_EQ(run({"oracle", "gamma2", "--m", "3", "--n", "4"}).out, "6\n");
    EXPECT_EQ(run({"oracle", "gamma2", "--m", "12", "--n", "4"}).code, 1);
    EXPECT_EQ(run({"oracle"}).code, 1);
}

TEST(Cli, ReproducePasses) {
    const auto r = run({"reproduce", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["claims"].size(), 8u);
    EXPECT_FALSE(j.contains("wall_time_ms"));
    EXPECT_EQ(run({"reproduce", "--format", "json"}).out, r.out);
    EXPECT_TRUE(json::parse(run({"reproduce", "--format", "json", "--timing"}).out).contains("wall_time_ms"));
}

TEST(Cli, ReproduceNegativeControl) {
    const auto r = run({"reproduce", "--format", "json", "--corrupt-factor", "020"});
    EXPECT_EQ(r.code, 2);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["claims"][0]["status"], "FAIL");
    EXPECT_EQ(run({"reproduce", "--corrupt-factor", "999"}).code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    const auto h = run({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("reproduce"), std::string::npos);
}

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "qcirc/error.hpp"
#include "qcirc/serialize.hpp"
#include "support/cli_cases.hpp"

namespace qcirc {
namespace {

using testing::cli_cases;
using testing::run_cli;

class GoldenTest : public ::testing::TestWithParam<testing::CliCase> {};

TEST_P(GoldenTest, MatchesGoldenAndIsDeterministic) {
  const auto& c = GetParam();
  const auto first = run_cli(c.args);
  const auto second = run_cli(c.args);
  EXPECT_EQ(first.exit_code, c.exit_code) << first.err;
  EXPECT_EQ(first.out, second.out);
  const std::string path = testing::golden_path(c.name);
  if (testing::updating_golden()) {
    std::ofstream(path) << first.out;
    GTEST_SKIP() << "rewrote " << path;
  }
  const auto golden = testing::read_file(path);
  ASSERT_TRUE(golden.has_value()) << "missing " << path;
  EXPECT_EQ(first.out, *golden);
}

INSTANTIATE_TEST_SUITE_P(Cli, GoldenTest, ::testing::ValuesIn(cli_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, EveryErrorNameIsReachable) {
  std::set<std::string> seen;
  for (const auto& c : cli_cases()) {
    if (c.exit_code == 0) continue;
    const auto r = run_cli(c.args);
    seen.insert(Json::parse(r.out).at("error").get<std::string>());
  }
  for (int k = 0; k <= static_cast<int>(ErrorCode::ParseError); ++k) {
    const auto name = std::string(error_name(static_cast<ErrorCode>(k)));
    EXPECT_TRUE(seen.contains(name)) << name;
  }
}

TEST(Cli, ReferenceExamples) {
  const auto r = run_cli({"resonance", "--weights", "1,2"});
  ASSERT_EQ(r.exit_code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("resonance_sets").at("2").dump(), "[[0,1],[2,0]]");
  EXPECT_EQ(j.at("mu"), 2);
  const auto p = Json::parse(run_cli({"partition", "--weights", "1,2,2,3"}).out);
  EXPECT_EQ(p.at("boundaries").dump(), "[0,1,3,4]");
  const auto e = run_cli({"resonance", "--weights", "2,4"});
  EXPECT_EQ(e.exit_code, 1);
  EXPECT_EQ(Json::parse(e.out).dump(), R"({"error":"NotCoprime"})");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).exit_code, 2);
  EXPECT_EQ(run_cli({"bogus"}).exit_code, 2);
  EXPECT_EQ(run_cli({"resonance"}).exit_code, 2);
  EXPECT_EQ(run_cli({"resonance", "--weights", "1,x"}).exit_code, 2);
  EXPECT_EQ(run_cli({"sigma", "random", "--weights", "1,2"}).exit_code, 2);  // seed mandatory
  EXPECT_EQ(run_cli({"quasi-order", "--weights", "1,2", "--trials", "0", "--seed", "1"}).exit_code,
            2);
  EXPECT_EQ(run_cli({"sigma", "invert", "--map", "/nonexistent/file.json"}).exit_code, 2);
  EXPECT_EQ(run_cli({"--help"}).exit_code, 0);
}

TEST(Cli, SigmaInvertTwiceReproducesRandomOutput) {
  for (const char* weights : {"1,2,4", "1,1,2,3", "2,3,5"}) {
    const auto sampled = run_cli({"sigma", "random", "--weights", weights, "--seed", "21"});
    ASSERT_EQ(sampled.exit_code, 0);
    const auto once = run_cli({"sigma", "invert", "--map", "-"}, sampled.out);
    ASSERT_EQ(once.exit_code, 0);
    const auto twice = run_cli({"sigma", "invert", "--map", "-"}, once.out);
    ASSERT_EQ(twice.exit_code, 0);
    EXPECT_EQ(twice.out, sampled.out);
  }
}

}  // namespace
}  // namespace qcirc

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "torushom/cli.hpp"
#include "torushom/engine.hpp"
#include "torushom/format.hpp"

namespace torushom::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, Environment env = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, env);
  return {code, out.str(), err.str()};
}

TEST(Cli, ComputeColoredUnknot) {
  const Result r = run_cli({"compute", "--torus", "1", "1", "--color", "2", "--theory", "column", "--format", "text"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string value = r.out.substr(r.out.find(": ") + 2);
  EXPECT_EQ(parse_rat_func(value.substr(0, value.find('\n'))),
            parse_rat_func("(1 + A)*(Q + A)/((1 - Q)^2*(1 - T)*(1 - Q^-1*T))"));
}

TEST(Cli, ComputeJsonAndLatex) {
  const Result j = run_cli({"compute", "--torus", "2", "3", "--reduced", "--format", "json"});
  ASSERT_EQ(j.code, kOk) << j.err;
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(rat_func_from_json(doc["reduced"]), parse_rat_func("(A + Q + T)/Q"));
  const Result l = run_cli({"compute", "--torus", "2", "3", "--theory", "row", "--format", "latex"});
  ASSERT_EQ(l.code, kOk);
  EXPECT_NE(l.out.find("\\frac"), std::string::npos);
}

TEST(Cli, StateQuery) {
  const Result r = run_cli({"state", "--v", "10", "--w", "10", "--sigma", "1", "--theory", "column"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(parse_rat_func(r.out.substr(0, r.out.find('\n'))),
            parse_rat_func("(1 + A)*(Q + A + T - Q*T)/(Q*(1 - Q)^2*(1 - T)^2)"));
  const Result e = run_cli({"state", "--v", "0", "--w", "0", "--explain"});
  ASSERT_EQ(e.code, kOk);
  EXPECT_EQ(e.out.rfind("R6", 0), 0u);
}

TEST(Cli, VerifySuites) {
  const Result m = run_cli({"verify", "mirror", "--max", "3", "--color-max", "2", "--jobs", "2"});
  EXPECT_EQ(m.code, kOk) << m.out;
  EXPECT_NE(m.out.find("mirror: 18/18 passed"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "invariance", "--max", "3", "--color-max", "2"}).code, kOk);
  EXPECT_EQ(run_cli({"verify", "uncolored", "--max", "3"}).code, kOk);
  EXPECT_EQ(run_cli({"verify", "hrw", "--color-max", "3"}).code, kOk);
  const Result h = run_cli({"verify", "homfly", "--max", "4"});
  EXPECT_EQ(h.code, kOk) << h.out;
  EXPECT_NE(h.out.find("twist A -> -A"), std::string::npos);
}

TEST(Cli, TableStreamsReports) {
  const Result t = run_cli({"table", "--max", "2", "--color-max", "2", "--format", "json"});
  ASSERT_EQ(t.code, kOk);
  std::istringstream lines(t.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto doc = nlohmann::json::parse(line);
    EXPECT_TRUE(doc.contains("value"));
    ++count;
  }
  EXPECT_EQ(count, 8);
}

TEST(Cli, HomflyBraid) {
  const Result r = run_cli({"homfly", "--braid", "1,1,1"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "a^2*q^-2 + a^2*q^2 - a^4\n");
}

TEST(Cli, InvalidInputExitCodes) {
  EXPECT_EQ(run_cli({}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"compute", "--torus", "0", "2"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"compute", "--torus", "2", "3", "--format", "xml"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"state", "--v", "1", "--w", "0", "--sigma", "1"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"state", "--v", "01", "--w", "1", "--sigma", "1"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"homfly", "--braid", "1,q"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(Cli, GeneratorOutOfRange) {
  EXPECT_EQ(run_cli({"homfly", "--braid", "3", "--strands", "2"}).code, kInvalidInput);
}

class CliCache : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = std::filesystem::temp_directory_path() / "torushom_cli_cache_test.jsonl";
    std::filesystem::remove(path_);
  }
  void TearDown() override { std::filesystem::remove(path_); }
  std::filesystem::path path_;
};

TEST_F(CliCache, EnvironmentDefaultAndInfo) {
  Environment env{path_.string()};
  ASSERT_EQ(run_cli({"compute", "--torus", "2", "3"}, env).code, kOk);
  ASSERT_TRUE(std::filesystem::exists(path_));
  const Result info = run_cli({"cache-info", "--cache", path_.string()});
  ASSERT_EQ(info.code, kOk);
  EXPECT_NE(info.out.find("fingerprint: "), std::string::npos);
  EXPECT_EQ(info.out.find("entries: 0"), std::string::npos);
}

TEST_F(CliCache, WrongFingerprintIsInvalidInput) {
  std::ofstream(path_) << R"({"torushom_memo":1,"fingerprint":"ffffffffffffffff"})" << "\n";
  const Result r = run_cli({"compute", "--torus", "2", "3", "--cache", path_.string()});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_NE(r.err.find("fingerprint"), std::string::npos);
}

TEST_F(CliCache, TamperedEntryIsInternalContradiction) {
  // A trusted but wrong cached value for the trefoil state makes the (1 + A)
  // division in the reduction fail.
  std::ofstream(path_) << R"({"torushom_memo":1,"fingerprint":")" << convention_fingerprint() << "\"}\n"
                       << R"({"theory":"column","v":"10","w":"100","sigma":"1","value":)"
                       << to_json(parse_rat_func("1 + Q")).dump() << "}\n";
  const Result r = run_cli({"compute", "--torus", "2", "3", "--reduced", "--cache", path_.string()});
  EXPECT_EQ(r.code, kInternalContradiction) << r.err;
}

}  // namespace
}  // namespace torushom::cli

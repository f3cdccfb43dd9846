#include "expoly/cli.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace expoly::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_in_process(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the built binary through the shell; stderr is discarded.
Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string(EXPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, "", ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

TEST(Table, TextRows) {
  const auto r0 = run_in_process({"table", "--n-max", "0"});
  EXPECT_EQ(r0.code, 0);
  EXPECT_EQ(r0.out, "0 | l | l\n");
  const auto r1 = run_in_process({"table", "--n-max", "1"});
  EXPECT_EQ(r1.out, "0 | l | l\n1 | l*x - l^2 | -l^2\n");
}

TEST(Table, JsonShape) {
  const auto r = run_in_process({"table", "--n-max", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(j[i]["n"], i);
    EXPECT_TRUE(j[i]["poly"].is_string());
    EXPECT_TRUE(j[i]["number"].is_string());
  }
  EXPECT_EQ(j[2]["poly"], "l*x^2 - 2*l^2*x + l^3");
  EXPECT_EQ(j[2]["number"], "l^3");
}

TEST(Table, GuardrailOnDegree) {
  EXPECT_EQ(run_in_process({"table", "--n-max", "65"}).code, 2);
  EXPECT_EQ(run_in_process({"table", "--n-max", "64"}).code, 0);
}

TEST(Coeff, SideBySide) {
  const auto r = run_in_process({"coeff", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 | l*x^2 - 2*l^2*x + l^3 | l*x^2 - 2*l^2*x + l^3 | equal\n");
  const auto j = nlohmann::json::parse(run_in_process({"coeff", "--n", "3", "--format", "json"}).out);
  EXPECT_EQ(j["equal"], true);
  EXPECT_EQ(j["egf"], j["closed"]);
}

TEST(Expand, Examples) {
  EXPECT_EQ(run_in_process({"expand", "--n", "2", "--set", "l=1", "--set", "x=3"}).out, "4\n");
  EXPECT_EQ(run_in_process({"expand", "--n", "1", "--set", "l=1/2"}).out, "1/2*x - 1/4\n");
  EXPECT_EQ(run_in_process({"expand", "--n", "0"}).out, "l\n");
}

TEST(Expand, UsageErrors) {
  EXPECT_EQ(run_in_process({"expand", "--n", "2", "--set", "l=0.5"}).code, 2);
  EXPECT_EQ(run_in_process({"expand", "--n", "2", "--set", "l=1/0"}).code, 2);
  EXPECT_EQ(run_in_process({"expand", "--n", "2", "--set", "z=1"}).code, 2);
  EXPECT_EQ(run_in_process({"expand", "--n", "2", "--set", "l"}).code, 2);
}

TEST(Verify, BinomialSuite) {
  const auto r = run_in_process({"verify", "--suite", "binomial", "--n-max", "4", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 5U);
  for (std::size_t n = 0; n < 5; ++n) {
    EXPECT_EQ(j[n]["identity"], "binomial");
    EXPECT_EQ(j[n]["n"], n);
    EXPECT_EQ(j[n]["passed"], true);
    EXPECT_TRUE(j[n]["witness"].is_null());
  }
}

TEST(Verify, JsonSchema) {
  const auto r = run_in_process({"verify", "--suite", "product", "--n-max", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 6U);  // (n,k) with k <= n <= 2
  for (const auto& rep : j) {
    ASSERT_TRUE(rep.is_object());
    EXPECT_EQ(rep.size(), 7U);
    EXPECT_TRUE(rep["identity"].is_string());
    EXPECT_TRUE(rep["n"].is_number_integer());
    EXPECT_TRUE(rep["params"].is_object());
    EXPECT_TRUE(rep["passed"].is_boolean());
    EXPECT_TRUE(rep["lhs"].is_string());
    EXPECT_TRUE(rep["rhs"].is_string());
    EXPECT_TRUE(rep["witness"].is_null() || rep["witness"].is_string());
    EXPECT_TRUE(rep["params"]["k"].is_number_integer());
    EXPECT_EQ(rep["params"]["grid_conclusive"], true);
  }
}

TEST(Verify, LiteralSuitesExpectFailure) {
  const auto r = run_in_process({"verify", "--suite", "addition-literal", "--n-max", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS addition-literal n=0"), std::string::npos);
  EXPECT_NE(r.out.find("XFAIL addition-literal n=1"), std::string::npos);
  EXPECT_NE(r.out.find("witness: l*x*y - l^2*y - l*y"), std::string::npos);

  const auto j = nlohmann::json::parse(
      run_in_process({"verify", "--suite", "integral-literal", "--n-max", "0", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(j[0]["passed"], false);
  EXPECT_EQ(j[0]["witness"], "l*x - l*y");
  EXPECT_EQ(j[0]["params"]["expected"], "fail");
}

TEST(Verify, TextAndJsonAgree) {
  const std::vector<std::string> base = {"verify", "--suite", "all", "--n-max", "2"};
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto text = run_in_process(base);
  const auto json = run_in_process(json_args);
  EXPECT_EQ(text.code, json.code);
  const auto j = nlohmann::json::parse(json.out);
  std::istringstream lines(text.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("PASS", 0) != 0 && line.rfind("FAIL", 0) != 0 && line.rfind("XFAIL", 0) != 0 &&
        line.rfind("XPASS", 0) != 0) {
      continue;
    }
    ASSERT_LT(i, j.size());
    const bool passed = line.rfind("PASS", 0) == 0 || line.rfind("XPASS", 0) == 0;
    EXPECT_EQ(passed, j[i]["passed"].get<bool>()) << line;
    EXPECT_NE(line.find(j[i]["identity"].get<std::string>()), std::string::npos) << line;
    ++i;
  }
  EXPECT_EQ(i, j.size());
}

TEST(Verify, UsageErrors) {
  EXPECT_EQ(run_in_process({"verify", "--suite", "bogus", "--n-max", "1"}).code, 2);
  EXPECT_EQ(run_in_process({"verify", "--n-max", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_in_process({"verify", "--n-max", "1", "--ab-grid-max", "0"}).code, 2);
  EXPECT_EQ(run_in_process({"verify"}).code, 2);
  EXPECT_EQ(run_in_process({}).code, 2);
  EXPECT_EQ(run_in_process({"frobnicate"}).code, 2);
}

TEST(Verify, UnexpectedOutcomesMapToExitOne) {
  VerificationReport failed{.identity_id = IdentityId::binomial, .params = {.n = 2}, .passed = false,
                            .witness = "l"};
  VerificationReport ok{.identity_id = IdentityId::binomial, .params = {.n = 1}};
  VerificationReport xpass{.identity_id = IdentityId::integral_literal, .params = {.n = 0}};
  EXPECT_EQ(tally_reports({ok}).exit_code(), ExitCode::ok);
  EXPECT_EQ(tally_reports({ok, failed}).exit_code(), ExitCode::verification_failure);
  EXPECT_EQ(tally_reports({xpass}).exit_code(), ExitCode::verification_failure);
  const auto t = tally_reports({ok, failed, xpass});
  EXPECT_EQ(t.passed, 1U);
  EXPECT_EQ(t.unexpected, 2U);
}

TEST(Verify, DerivativeSkipsDegreeZero) {
  const auto j = nlohmann::json::parse(
      run_in_process({"verify", "--suite", "derivative", "--n-max", "3", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 3U);
  EXPECT_EQ(j[0]["n"], 1);
}

TEST(Verify, SmallGridOverrideIsInconclusiveButPasses) {
  const auto r = run_in_process({"verify", "--suite", "ab-sum", "--n-max", "2", "--ab-grid-max", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pairs=4 inconclusive"), std::string::npos);
}

TEST(Verify, ThreadCountDoesNotChangeOutput) {
  const auto one = run_in_process({"verify", "--n-max", "3", "--jobs", "1"});
  const auto many = run_in_process({"verify", "--n-max", "3", "--jobs", "8"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST(EndToEnd, ExitCodesAndDeterminism) {
  const auto a = run_binary("verify --suite binomial --n-max 4");
  const auto b = run_binary("verify --suite binomial --n-max 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_binary("verify --suite addition-literal --n-max 1").code, 0);
  EXPECT_EQ(run_binary("verify --suite bogus --n-max 1").code, 2);
  EXPECT_EQ(run_binary("expand --n 1 --set l=1/2").out, "1/2*x - 1/4\n");
  EXPECT_EQ(run_binary("table --n-max 1").out, "0 | l | l\n1 | l*x - l^2 | -l^2\n");
}

}  // namespace
}  // namespace expoly::cli

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"

using namespace adelic::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "adelic");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ChiOfTrivialIdeleOnQ) {
  auto r = invoke({"chi", "--field", "Q", "--idele", "trivial", "--output", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"]["value"].get<double>(), 0.0);
  EXPECT_EQ(j["value"]["provenance"], "exact-symbolic");
}

TEST(Cli, ChiOfGaussianTrivialIsMinusHalfLogFour) {
  auto r = invoke({"chi", "--field", "Q(i)", "--output", "json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"]["symbolic"], nlohmann::json::parse(R"([[2,"-1"]])"));
}

TEST(Cli, SerreOnGaussianPasses) {
  auto r = invoke({"verify", "serre", "--field", "Q(i)", "--idele", "trivial", "--tol", "1e-10", "--output", "json"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_GT(j["lattice_points_used"].get<int>(), 0);
}

TEST(Cli, LemmasOverThreeAdicFieldsPass) {
  auto r = invoke({"verify", "lemmas", "--p", "3", "--range", "-3..3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("all lemma checks passed"), std::string::npos);
}

TEST(Cli, InversionIsDeterministicInSeed) {
  auto a = invoke({"verify", "inversion", "--local", "p=3 base=padic poly=x^2-3", "--trials", "4", "--seed", "9", "--output", "json"});
  auto b = invoke({"verify", "inversion", "--local", "p=3 base=padic poly=x^2-3", "--trials", "4", "--seed", "9", "--output", "json"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"chi", "--field", "Q(sqrt 4)"}).code, kUsage);
  EXPECT_EQ(invoke({"chi", "--field", "Q", "--idele", "p4#0:1"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "nonsense"}).code, kUsage);
  EXPECT_EQ(invoke({"chi", "--tol", "-1"}).code, kUsage);
  EXPECT_EQ(invoke({"h0", "--field", "hyperelliptic q=3 f=1,0,-1,0"}).code, kUnsupported);
  EXPECT_EQ(invoke({"chi-rel", "--field", "Q", "--base", "Q(i)"}).code, kUnsupported);
  EXPECT_EQ(invoke({"h0", "--field", "Q", "--idele", "inf#0:1000000", "--max-radius", "10"}).code, kComputation);
}

TEST(Cli, SuitePassesAndNegativeControlFails) {
  RunConfig c;
  c.command = "suite";
  c.seed = 3;
  auto results = run_suite(c);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;

  c.negative_control = true;
  auto with_control = run_suite(c);
  ASSERT_EQ(with_control.size(), results.size() + 1);
  EXPECT_EQ(with_control.back().name, "negative-control/serre-trivial-kappa");
  EXPECT_FALSE(with_control.back().pass);
  std::ostringstream out, err;
  EXPECT_EQ(run(c, out, err), kVerificationFailed);
}

TEST(Cli, ConfigFileSuppliesFlags) {
  std::string path = ::testing::TempDir() + "adelic_cli_config.toml";
  {
    std::ofstream f(path);
    f << "[chi]\nfield = \"Q(sqrt -3)\"\nidele = \"p3#0:1\"\noutput = \"json\"\n";
  }
  auto r = invoke({"--config", path, "chi"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["field"], "Q(sqrt -3)");
}

TEST(Cli, ParseRange) {
  EXPECT_EQ(parse_range("-3..3"), std::make_pair(-3, 3));
  EXPECT_THROW(parse_range("3..-3"), std::exception);
  EXPECT_THROW(parse_range("1-2"), std::exception);
}

TEST(Cli, FieldDescriptorFile) {
  std::string path = ::testing::TempDir() + "adelic_field.txt";
  {
    std::ofstream f(path);
    f << "# y^2 = t^3 - t over F_3\nkind = hyperelliptic\nq = 3\nf = 1,0,-1,0\n";
  }
  auto r = invoke({"chi-rel", "--field", path, "--output", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"]["symbolic"], nlohmann::json::parse(R"([[3,"-2"]])"));
  {
    std::ofstream f(path);
    f << "kind = quadratic\n";
  }
  EXPECT_EQ(invoke({"chi", "--field", path}).code, kUsage);
}

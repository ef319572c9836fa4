#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "grpverify/ledger.hpp"
#include "grpverify_cli/cli.hpp"

namespace grpverify {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "grpverify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, AnalyzeSharpnessWitness) {
  const auto r = invoke({"analyze", "swapsq(A(5))", "-p", "7"});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_NE(r.out.find("min_index    7200"), std::string::npos);
  EXPECT_NE(r.out.find("j_ratio      7200"), std::string::npos);
}

TEST(Cli, AnalyzeCyclic) {
  const auto r = invoke({"analyze", "C(12)", "-p", "3"});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_NE(r.out.find("min_index    3"), std::string::npos);
  EXPECT_NE(r.out.find("j_ratio      1/9"), std::string::npos);
  EXPECT_NE(r.out.find("order 4, C(4)"), std::string::npos);
  EXPECT_NE(invoke({"analyze", "PSL(2,7)", "-p", "5"}).out.find("min_index    168"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"analyze", "PGL(2,6)", "-p", "5"}).code, cli::kUsage);
  EXPECT_NE(invoke({"analyze", "PGL(2,6)", "-p", "5"}).err.find("offset 6"), std::string::npos);
  EXPECT_EQ(invoke({"analyze", "prod(C(2)", "-p", "5"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"analyze", "C(2)", "-p", "4"}).code, cli::kUsage);
  EXPECT_EQ(invoke({}).code, cli::kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"verify", "--claim", "NOPE-1"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"verify", "--all", "--claim", "SHARP-D10"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"verify", "--jobs", "0"}).code, cli::kUsage);
}

TEST(Cli, CapExceededIsInternal) {
  EXPECT_EQ(invoke({"aut", "S(6)", "--max-aut-order", "100"}).code, cli::kInternal);
  EXPECT_EQ(invoke({"subgroups", "S(8)", "--max-order", "1000"}).code, cli::kInternal);
}

TEST(Cli, SubgroupsAndAut) {
  const auto s = invoke({"subgroups", "S(4)", "--up-to-conjugacy"});
  EXPECT_EQ(s.code, cli::kPass);
  EXPECT_NE(s.out.find("11 classes, 30 subgroups"), std::string::npos);
  EXPECT_NE(invoke({"subgroups", "A(5)"}).out.find("59 subgroups"), std::string::npos);
  const auto a = invoke({"aut", "PSL(2,9)"});
  EXPECT_NE(a.out.find("|Aut|        1440"), std::string::npos);
  EXPECT_NE(a.out.find("|Out|        4"), std::string::npos);
}

TEST(Cli, VerifyWritesJson) {
  const auto path = std::filesystem::temp_directory_path() / "grpverify_cli_test.json";
  const auto r = invoke({"verify", "--claim", "SHARP-D10", "--claim", "SHARP-CHAR2", "--json", path.string()});
  EXPECT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_NE(r.out.find("SHARP-D10"), std::string::npos);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto results = parse_report_json(text.str());
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].id, "SHARP-D10");
  EXPECT_EQ(results[1].status, ClaimStatus::Pass);
  std::filesystem::remove(path);
}

TEST(Cli, ClaimsListing) {
  const auto r = invoke({"claims"});
  EXPECT_EQ(r.code, cli::kPass);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, builtin_claims().size());
}

}  // namespace
}  // namespace grpverify

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include <json.hpp>

#include "grpverify/ledger.hpp"

namespace grpverify {
namespace {

std::vector<ClaimRecord> select(const std::vector<std::string>& filters) {
  std::vector<ClaimRecord> out;
  for (auto& c : builtin_claims())
    if (matches_filter(c.id, filters)) out.push_back(std::move(c));
  return out;
}

TEST(Registry, IdsAreUniqueAndReferenced) {
  const auto claims = builtin_claims();
  std::set<std::string> ids;
  for (const auto& c : claims) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.expected.empty()) << c.id;
    EXPECT_NE(c.paper_ref.find(": \""), std::string::npos) << c.id;
    EXPECT_TRUE(c.check) << c.id;
  }
  EXPECT_GE(claims.size(), 50u);
}

TEST(Filter, Globs) {
  EXPECT_TRUE(matches_filter("SHARP-D10", {}));
  EXPECT_TRUE(matches_filter("SHARP-D10", {"SHARP-*"}));
  EXPECT_TRUE(matches_filter("LEM-3.8-v", {"LEM-3.8-?"}));
  EXPECT_FALSE(matches_filter("LEM-3.8-vi", {"LEM-3.8-?"}));
  EXPECT_FALSE(matches_filter("SHARP-D10", {"SHARP-D1"}));
  EXPECT_TRUE(matches_filter("THM-1.9", {"EX-*", "THM-1.9"}));
}

TEST(Evaluate, MismatchProducesWitness) {
  ClaimRecord c;
  c.id = "X";
  c.expected = {{"a", "1"}, {"b", "true"}};
  const auto pass = evaluate(c, {{"a", "1", ""}, {"b", "true", ""}});
  EXPECT_EQ(pass.status, ClaimStatus::Pass);
  EXPECT_FALSE(pass.witness.has_value());
  const auto fail = evaluate(c, {{"a", "2", "element 5"}, {"b", "true", ""}});
  EXPECT_EQ(fail.status, ClaimStatus::Fail);
  ASSERT_TRUE(fail.witness.has_value());
  EXPECT_NE(fail.witness->find("a: expected 1, got 2 (element 5)"), std::string::npos);
  const auto missing = evaluate(c, {{"a", "1", ""}});
  EXPECT_EQ(missing.status, ClaimStatus::Fail);
  EXPECT_NE(missing.witness->find("<missing>"), std::string::npos);
}

TEST(Run, SkipsOnCapAndTimeout) {
  ClaimRecord big;
  big.id = "BIG";
  big.expected = {{"order", "40320"}};
  big.check = [](ClaimContext& ctx) { ctx.record("order", std::uint64_t(ctx.group("S(8)").order())); };
  RunOptions opts;
  opts.caps.max_order = 1000;
  EXPECT_EQ(run_claim(big, opts).result.status, ClaimStatus::Skip);
  opts.caps.max_order = 50000;
  EXPECT_EQ(run_claim(big, opts).result.status, ClaimStatus::Pass);

  ClaimRecord thrower;
  thrower.id = "T";
  thrower.expected = {{"x", "1"}};
  thrower.check = [](ClaimContext&) { throw SkipClaim("not applicable"); };
  const auto r = run_claim(thrower, opts);
  EXPECT_EQ(r.result.status, ClaimStatus::Skip);
  ASSERT_TRUE(r.result.witness.has_value());
  EXPECT_NE(r.result.witness->find("not applicable"), std::string::npos);
}

TEST(Run, DeterministicAcrossJobCounts) {
  const auto claims = select({"SHARP-*", "EX-2.*", "THM-4.1-i*"});
  RunOptions one;
  RunOptions many;
  many.jobs = 4;
  auto a = run(claims, one);
  auto b = run(claims, many);
  ASSERT_EQ(a.size(), claims.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].runtime_ms = b[i].runtime_ms = 0;
    EXPECT_EQ(a[i], b[i]) << a[i].id;
    EXPECT_EQ(a[i].id, claims[i].id);
    EXPECT_EQ(a[i].status, ClaimStatus::Pass) << a[i].id << ": " << a[i].witness.value_or("");
  }
}

TEST(Report, JsonRoundTrip) {
  std::vector<ClaimResult> results(3);
  results[0] = {"A-1", "lemma:x: \"q\\\"uote\"", ClaimStatus::Pass, "k=1", "k=1", std::nullopt, 12};
  results[1] = {"B-2", "r", ClaimStatus::Fail, "k=1; j=2/3", "k=2; j=2/3", "k: expected 1, got 2", 4};
  results[2] = {"C-3", "r", ClaimStatus::Skip, "", "", "cap exceeded", 0};
  EXPECT_EQ(parse_report_json(report_json(results)), results);
  EXPECT_THROW(parse_report_json("{"), std::runtime_error);
  EXPECT_THROW(parse_report_json("{\"results\": 3}"), std::runtime_error);
}

TEST(Report, WritesFileAndSummary) {
  const auto claims = select({"SHARP-CHAR2"});
  const auto results = run(claims, {});
  const auto path = std::filesystem::temp_directory_path() / "grpverify_ledger_test.json";
  write_report(path.string(), results);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(parse_report_json(text.str()), results);
  std::filesystem::remove(path);
  const Summary s = summarize(results);
  EXPECT_EQ(s.pass, 1u);
  EXPECT_EQ(s.fail + s.skip, 0u);
  EXPECT_NE(report_text(results).find("SHARP-CHAR2"), std::string::npos);
  EXPECT_THROW(write_report("/nonexistent-dir/x.json", results), std::runtime_error);
}

TEST(Report, JsonSchema) {
  std::vector<ClaimResult> results(2);
  results[0] = {"A", "r", ClaimStatus::Pass, "k=1", "k=1", std::nullopt, 5};
  results[1] = {"B", "r", ClaimStatus::Fail, "k=1", "k=2", "k: expected 1, got 2", 7};
  const auto doc = nlohmann::json::parse(report_json(results));
  EXPECT_EQ(doc.at("version"), 1);
  ASSERT_TRUE(doc.at("claims").is_array());
  for (const auto& c : doc.at("claims")) {
    EXPECT_EQ(c.size(), 7u);
    for (const char* k : {"id", "paper_ref", "status", "expected", "actual"}) EXPECT_TRUE(c.at(k).is_string()) << k;
    EXPECT_TRUE(c.at("witness").is_null() || c.at("witness").is_string());
    EXPECT_TRUE(c.at("runtime_ms").is_number_integer());
  }
  EXPECT_EQ(doc["claims"][0]["status"], "pass");
  EXPECT_TRUE(doc["claims"][0]["witness"].is_null());
  EXPECT_EQ(doc["claims"][1]["status"], "fail");
  EXPECT_EQ(doc.at("summary"), (nlohmann::json{{"pass", 1}, {"fail", 1}, {"skip", 0}}));
}

}  // namespace
}  // namespace grpverify

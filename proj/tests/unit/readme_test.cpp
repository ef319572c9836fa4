#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "grpverify/ledger.hpp"

namespace grpverify {
namespace {

TEST(Readme, ClaimIndexListsEveryClaim) {
  std::ifstream in(GRPVERIFY_README);
  ASSERT_TRUE(in) << GRPVERIFY_README;
  std::stringstream text;
  text << in.rdbuf();
  for (const auto& c : builtin_claims())
    EXPECT_NE(text.str().find("| `" + c.id + "` | " + to_string(c.kind) + " |"), std::string::npos) << c.id;
}

}  // namespace
}  // namespace grpverify

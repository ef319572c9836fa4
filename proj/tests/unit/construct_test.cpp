#include <gtest/gtest.h>

#include <map>
#include <random>

#include "grpverify/construct.hpp"
#include "grpverify/error.hpp"
#include "grpverify/lattice.hpp"

namespace grpverify {
namespace {

std::uint64_t order_of(const std::string& e) { return build(e).order(); }

const MaterializedGroup& group(const GroupExpr& e) {
  static std::map<std::string, GroupHandle> cache;
  const std::string key = to_string(e);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build(e)).first;
  return it->second.materialized();
}
const MaterializedGroup& group(const std::string& e) { return group(parse_expr(e)); }

TEST(Build, ClosedFormOrders) {
  EXPECT_EQ(order_of("C(12)"), 12u);
  EXPECT_EQ(order_of("D(5)"), 10u);
  EXPECT_EQ(order_of("S(5)"), 120u);
  EXPECT_EQ(order_of("A(6)"), 360u);
  EXPECT_EQ(order_of("EA(2,4)"), 16u);
  EXPECT_EQ(order_of("H3"), 27u);
  EXPECT_EQ(order_of("HESS"), 216u);
  EXPECT_EQ(order_of("HSL23"), 648u);
  EXPECT_EQ(order_of("PSL(3,2)"), 168u);
  EXPECT_EQ(order_of("WD(5)"), 1920u);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const std::uint64_t pgl = q * (q * q - 1);
    const std::string qs = std::to_string(q);
    EXPECT_EQ(order_of("PGL(2," + qs + ")"), pgl);
    EXPECT_EQ(order_of("PSL(2," + qs + ")"), q % 2 ? pgl / 2 : pgl);
    EXPECT_EQ(order_of("GL(2," + qs + ")"), pgl * (q - 1));
    EXPECT_EQ(order_of("SL(2," + qs + ")"), pgl);
  }
  EXPECT_EQ(order_of("prod(A(5),A(5))"), 3600u);
  EXPECT_EQ(order_of("swapsq(A(5))"), 7200u);
}

TEST(Build, CatalogOrderAgreesWithStabilizerChain) {
  for (const char* e : {"C(30)", "D(12)", "S(6)", "A(5)", "EA(3,3)", "GL(2,3)", "PGL(2,9)", "WD(4)",
                        "prod(S(3),C(4))", "swapsq(S(3))"}) {
    const auto expected = catalog_order(parse_expr(e));
    ASSERT_TRUE(expected.has_value()) << e;
    EXPECT_EQ(order_of(e), *expected) << e;
  }
}

TEST(Build, MaterializedSizes) {
  EXPECT_EQ(build("S(4)").materialized().order(), 24u);
  EXPECT_EQ(build("PGL(2,9)").materialized().order(), 720u);
  EXPECT_EQ(build("swapsq(A(5))").materialized().order(), 7200u);
  EXPECT_THROW(build("S(8)").materialized(1000), CapExceeded);
}

TEST(Build, SmallIsomorphisms) {
  EXPECT_TRUE(is_isomorphic(group("D(2)"), group("EA(2,2)")));
  EXPECT_TRUE(is_isomorphic(group("GL(2,2)"), group("S(3)")));
  EXPECT_FALSE(is_isomorphic(group("C(4)"), group("EA(2,2)")));
}

TEST(Build, HeisenbergHasExponentThree) {
  const auto& m = group("H3");
  EXPECT_EQ(exponent(m), 3u);
  EXPECT_FALSE(is_abelian(m));
  EXPECT_EQ(center(m).count(), 3u);
}

TEST(Build, NonabelianOrder21) {
  const auto& m = group("semi(C(7),C(3),explicit[2])");
  EXPECT_EQ(m.order(), 21u);
  EXPECT_FALSE(is_abelian(m));
}

TEST(Build, SharpnessGroupOfOrder160) {
  const auto h = build("semi(EA(2,4),pgroup(5,\"(1 2 3 4 5)\",\"(2 5)(3 4)\"),evenperm)");
  EXPECT_EQ(h.order(), 160u);
}

TEST(Build, HeisenbergBySL23) {
  const auto h = heisenberg_sl23();
  const auto& m = h.materialized();
  EXPECT_EQ(m.order(), 648u);
  EXPECT_EQ(center(m).count(), 3u);
  const ElementSet n = h.generated(h.normal_generators);
  ASSERT_EQ(n.count(), 27u);
  EXPECT_TRUE(is_normal(m, n));
  EXPECT_TRUE(is_isomorphic(m.subgroup(n), group("H3")));
  EXPECT_TRUE(is_isomorphic(quotient(m, n), group("SL(2,3)")));
}

TEST(Build, SemidirectHasNormalFactorAndQuotient) {
  for (const char* e : {"semi(C(7),C(3),explicit[2])", "semi(C(3),C(4),inv)", "semi(EA(3,2),C(8),explicit[1 2 1 1])",
                        "semi(EA(2,3),C(7),explicit[0 0 1 1 0 1 0 1 0])", "semi(EA(3,3),S(4),quotperm)",
                        "semi(EA(3,3),S(4),sumzero)", "semi(EA(2,4),S(5),evenperm)"}) {
    const GroupExpr ast = parse_expr(e);
    const auto h = build(ast);
    const auto& m = h.materialized();
    const ElementSet n = h.generated(h.normal_generators);
    EXPECT_TRUE(is_normal(m, n)) << e;
    const auto& nm = group(ast.children[0]);
    const auto& hm = group(ast.children[1]);
    EXPECT_EQ(m.order(), nm.order() * hm.order()) << e;
    EXPECT_TRUE(is_isomorphic(m.subgroup(n), nm)) << e;
    EXPECT_TRUE(is_isomorphic(quotient(m, n), hm)) << e;
  }
}

TEST(Build, SwapSquareContainsProduct) {
  for (const char* g : {"S(3)", "A(4)", "D(5)"}) {
    const std::string inner(g);
    const auto h = build("swapsq(" + inner + ")");
    const auto& m = h.materialized();
    const auto& prod = group("prod(" + inner + "," + inner + ")");
    bool found = false;
    for (const auto& cls : subgroups_up_to_conjugacy(m))
      if (cls.order * 2 == m.order() && is_isomorphic(m.subgroup(cls.representative), prod)) found = true;
    EXPECT_TRUE(found) << g;
  }
}

TEST(Build, RejectsInvalidActions) {
  EXPECT_THROW(build("semi(C(7),C(3),explicit[3])"), std::invalid_argument);
  EXPECT_THROW(build("semi(C(6),C(2),explicit[2])"), std::invalid_argument);
}

TEST(Build, DomainErrors) {
  EXPECT_THROW(build("PGL(2,6)"), ParseError);
  EXPECT_THROW(build("EA(4,2)"), ParseError);
  EXPECT_THROW(build("C(0)"), ParseError);
}

TEST(Expr, ErrorOffsets) {
  try {
    parse_expr("PGL(2,6)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  try {
    parse_expr("prod(C(2),");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 10u);
  }
  EXPECT_THROW(parse_expr("Q(8)"), ParseError);
  EXPECT_THROW(parse_expr("C(2) extra"), ParseError);
}

// Random ASTs over the grammar; printing then parsing must give the same tree.
GroupExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 6);
  switch (pick(rng)) {
    case 0: return parse_expr("C(" + std::to_string(1 + rng() % 20) + ")");
    case 1: return parse_expr("D(" + std::to_string(2 + rng() % 9) + ")");
    case 2: return parse_expr("S(" + std::to_string(1 + rng() % 6) + ")");
    case 3: return parse_expr("EA(" + std::string(rng() % 2 ? "2" : "3") + "," + std::to_string(1 + rng() % 4) + ")");
    case 4: return parse_expr(rng() % 2 ? "H3" : "HESS");
    case 5: return parse_expr("PSL(2," + std::string(rng() % 2 ? "7" : "9") + ")");
    case 6: return parse_expr("pgroup(4,\"(1 2)\",\"(1 2 3 4)\")");
    case 7: {
      GroupExpr e = parse_expr("prod(C(2),C(2))");
      e.children = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
      return e;
    }
    case 8: {
      GroupExpr e = parse_expr("swapsq(C(2))");
      e.children = {random_expr(rng, depth - 1)};
      return e;
    }
    default: {
      GroupExpr e = parse_expr("semi(EA(2,2),C(3),explicit[0 1 1 1])");
      e.children[1] = random_expr(rng, depth - 1);
      return e;
    }
  }
}

TEST(Expr, PrintParseRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const GroupExpr e = random_expr(rng, 3);
    EXPECT_EQ(parse_expr(to_string(e)), e) << to_string(e);
  }
  EXPECT_EQ(to_string(parse_expr(" prod( A(5) , A(5) ) ")), "prod(A(5),A(5))");
}

}  // namespace
}  // namespace grpverify

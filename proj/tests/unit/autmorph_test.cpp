#include <gtest/gtest.h>

#include "grpverify/autmorph.hpp"
#include "grpverify/construct.hpp"
#include "grpverify/error.hpp"
#include "grpverify/lattice.hpp"
#include "oracles.hpp"

namespace grpverify {
namespace {

const MaterializedGroup& group(const std::string& e) {
  static std::map<std::string, GroupHandle> cache;
  auto it = cache.find(e);
  if (it == cache.end()) it = cache.emplace(e, build(e)).first;
  return it->second.materialized();
}

TEST(Aut, CyclicGroupsHaveEulerPhiAutomorphisms) {
  for (std::uint64_t n = 1; n <= 30; ++n)
    EXPECT_EQ(automorphism_group(group("C(" + std::to_string(n) + ")")).order(), testing::euler_phi(n)) << n;
}

TEST(Aut, KnownOrders) {
  struct Case {
    const char* expr;
    std::size_t aut;
    std::size_t out;
  };
  for (const Case& c : {Case{"EA(2,2)", 6, 6}, Case{"EA(2,3)", 168, 168}, Case{"S(3)", 6, 1}, Case{"D(4)", 8, 2},
                        Case{"A(4)", 24, 2}, Case{"S(4)", 24, 1}, Case{"A(5)", 120, 2}, Case{"H3", 432, 48},
                        Case{"semi(C(3),C(4),inv)", 12, 2}}) {
    const AutGroup a = automorphism_group(group(c.expr), kDefaultAutCap, 2);
    EXPECT_EQ(a.order(), c.aut) << c.expr;
    EXPECT_EQ(a.out_order, c.out) << c.expr;
    EXPECT_EQ(a.inner_order * a.out_order, a.order()) << c.expr;
  }
}

TEST(Aut, EveryMapIsAHomomorphism) {
  for (const char* e : {"S(4)", "D(6)", "semi(C(7),C(3),explicit[2])"}) {
    const auto& m = group(e);
    const AutGroup a = automorphism_group(m);
    for (const auto& phi : a.automorphisms)
      for (Index x = 0; x < m.order(); ++x)
        for (Index y = 0; y < m.order(); ++y) ASSERT_EQ(phi[m.mul(x, y)], m.mul(phi[x], phi[y])) << e;
  }
}

TEST(Aut, InnerAutomorphismsAreIncluded) {
  const auto& m = group("GL(2,3)");
  const AutGroup a = automorphism_group(m);
  EXPECT_EQ(a.inner_order, m.order() / center(m).count());
  for (Index g = 0; g < m.order(); ++g)
    EXPECT_TRUE(std::binary_search(a.automorphisms.begin(), a.automorphisms.end(), inner_automorphism(m, g)));
}

TEST(Aut, AutomorphismGroupIsAGroup) {
  const AutGroup a = automorphism_group(group("A(4)"));
  EXPECT_EQ(a.as_group().order(), 24u);
  EXPECT_TRUE(is_isomorphic(a.as_group(), group("S(4)")));
  const AutGroup d = automorphism_group(group("semi(C(3),C(4),inv)"));
  EXPECT_TRUE(is_isomorphic(d.as_group(), group("D(6)")));
}

TEST(Aut, CapIsEnforced) {
  EXPECT_THROW(automorphism_group(group("S(5)"), 100), CapExceeded);
}

TEST(Characteristic, ReferenceCases) {
  const auto& s4 = group("S(4)");
  const auto normals = normal_subgroups(s4);
  EXPECT_TRUE(is_characteristic(s4, normals[1]));
  for (const auto& s : all_subgroups(s4))
    if (s.count() > 1 && is_cyclic(s4, s)) EXPECT_FALSE(is_characteristic(s4, s));
  for (int n = 3; n <= 8; ++n) {
    const auto& d = group("D(" + std::to_string(n) + ")");
    bool found = false;
    for (const auto& s : normal_subgroups(d))
      if (s.count() == static_cast<std::size_t>(n) && is_cyclic(d, s)) found = is_characteristic(d, s);
    EXPECT_TRUE(found) << n;
  }
  const auto& pgl = group("PGL(2,5)");
  EXPECT_TRUE(is_characteristic(pgl, derived_subgroup(pgl)));
}

TEST(Characteristic, ImpliesNormal) {
  for (const auto& e : testing::corpus()) {
    const auto& m = group(e);
    if (m.order() > 100) continue;
    const AutGroup a = automorphism_group(m);
    for (const auto& cls : subgroups_up_to_conjugacy(m))
      if (is_characteristic(a, cls.representative)) EXPECT_TRUE(testing::brute_is_normal(m, cls.representative)) << e;
  }
}

TEST(Characteristic, CertificatesAboveCap) {
  const auto& m = group("swapsq(A(5))");
  const auto& normals = normal_subgroups(m);
  EXPECT_EQ(characteristic_status(m, m.trivial(), normals, 10).method, "trivial");
  EXPECT_EQ(characteristic_status(m, m.all(), normals, 10).method, "whole");
  EXPECT_EQ(characteristic_status(m, normals[1], normals, 10).method, "unique-order");
  EXPECT_EQ(characteristic_status(m, normals[1], normals, 10).status, CharStatus::Characteristic);
  // Each factor of A5 x A5 is normal, and the two share an order.
  const auto& p = group("prod(A(5),A(5))");
  const auto& pn = normal_subgroups(p);
  ASSERT_EQ(pn.size(), 4u);
  EXPECT_EQ(characteristic_status(p, pn[1], pn, 10).status, CharStatus::Untested);
  EXPECT_EQ(characteristic_status(p, pn[1], pn, 10).method, "char-untested");
}

// Intersection of the subgroups of maximal |H|·|C(H)|, by direct evaluation.
ElementSet brute_chermak_delgado(const MaterializedGroup& m) {
  std::size_t best = 0;
  ElementSet meet = m.all();
  for (const auto& s : all_subgroups(m)) {
    const std::size_t measure = s.count() * testing::brute_centralizer_order(m, s);
    if (measure > best) {
      best = measure;
      meet = s;
    } else if (measure == best) {
      meet = meet & s;
    }
  }
  return meet;
}

TEST(ChermakDelgado, MatchesMeasureTable) {
  EXPECT_EQ(chermak_delgado(group("C(12)")).subgroup, group("C(12)").all());
  EXPECT_EQ(chermak_delgado(group("EA(2,3)")).subgroup.count(), 8u);
  // In the symmetric group on four points the trivial group and the whole
  // group both have measure 24, the maximum.
  const auto& s4 = group("S(4)");
  EXPECT_EQ(chermak_delgado(s4).measure, 24u);
  EXPECT_EQ(chermak_delgado(s4).subgroup.count(), 1u);
  EXPECT_EQ(chermak_delgado(group("S(3)")).subgroup.count(), 3u);
  for (const auto& e : testing::corpus()) {
    const auto& m = group(e);
    if (m.order() > 100) continue;
    const auto cd = chermak_delgado(m);
    EXPECT_EQ(cd.subgroup, brute_chermak_delgado(m)) << e;
    EXPECT_TRUE(testing::brute_is_abelian(m, cd.subgroup)) << e;
    EXPECT_TRUE(center(m).subset_of(cd.subgroup)) << e;
  }
}

}  // namespace
}  // namespace grpverify

#include <gtest/gtest.h>

#include <algorithm>

#include "grpverify/construct.hpp"
#include "oracles.hpp"

namespace grpverify {
namespace {

const MaterializedGroup& group(const std::string& e) {
  static std::map<std::string, GroupHandle> cache;
  auto it = cache.find(e);
  if (it == cache.end()) it = cache.emplace(e, build(e)).first;
  return it->second.materialized();
}

std::vector<std::size_t> sorted_class_sizes(const MaterializedGroup& m) {
  std::vector<std::size_t> v;
  for (const auto& cls : conjugacy_classes(m)) v.push_back(cls.size());
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Materialize, TableMatchesComposition) {
  const auto& m = group("S(4)");
  for (Index a = 0; a < m.order(); ++a)
    for (Index b = 0; b < m.order(); ++b) ASSERT_EQ(m.element(m.mul(a, b)), compose(m.element(a), m.element(b)));
  for (Index a = 0; a < m.order(); ++a) {
    EXPECT_EQ(m.find(m.element(a)), a);
    EXPECT_EQ(m.element(a).order(), m.element_order(a));
  }
}

TEST(Materialize, LargeGroupWithoutTable) {
  const auto& m = group("swapsq(A(5))");
  ASSERT_EQ(m.order(), 7200u);
  for (Index a = 0; a < m.order(); a += 97)
    for (Index b = 3; b < m.order(); b += 211) EXPECT_EQ(m.element(m.mul(a, b)), compose(m.element(a), m.element(b)));
}

TEST(ConjugacyClasses, AgainstBruteForce) {
  EXPECT_EQ(sorted_class_sizes(group("S(4)")), (std::vector<std::size_t>{1, 3, 6, 6, 8}));
  EXPECT_EQ(conjugacy_classes(group("A(5)")).size(), 5u);
  for (const auto& e : testing::corpus()) {
    const auto& m = group(e);
    EXPECT_EQ(sorted_class_sizes(m), testing::brute_class_sizes(m)) << e;
    const auto per_element = class_sizes(m);
    for (const auto& cls : conjugacy_classes(m))
      for (Index x : cls) EXPECT_EQ(per_element[x], cls.size()) << e;
  }
  for (const auto& cls : conjugacy_classes(group("C(12)"))) EXPECT_EQ(cls.size(), 1u);
}

TEST(Subgroups, CenterAndCentralizers) {
  EXPECT_EQ(center(group("D(4)")).count(), 2u);
  EXPECT_EQ(center(group("D(5)")).count(), 1u);
  EXPECT_EQ(center(group("GL(2,3)")).count(), 2u);
  for (const auto& e : testing::corpus()) {
    const auto& m = group(e);
    if (m.order() > 200) continue;
    const ElementSet z = center(m);
    std::size_t central = 0;
    for (Index x = 0; x < m.order(); ++x) {
      const bool in = testing::brute_centralizer_order(m, ElementSet::from_indices(m.order(), {x})) == m.order();
      EXPECT_EQ(in, z.test(x)) << e;
      central += in;
    }
    EXPECT_EQ(central, z.count()) << e;
    EXPECT_EQ(is_abelian(m), z.count() == m.order()) << e;
  }
}

TEST(Subgroups, DerivedAndSylow) {
  const auto& s4 = group("S(4)");
  EXPECT_EQ(derived_subgroup(s4).count(), 12u);
  EXPECT_EQ(derived_subgroup(group("A(5)")).count(), 60u);
  EXPECT_EQ(derived_subgroup(group("C(6)")).count(), 1u);
  EXPECT_EQ(sylow_subgroup(s4, 2).count(), 8u);
  EXPECT_EQ(sylow_subgroup(s4, 3).count(), 3u);
  EXPECT_EQ(sylow_subgroup(s4, 5).count(), 1u);
  EXPECT_EQ(sylow_subgroup(group("PSL(2,7)"), 2).count(), 8u);
  EXPECT_EQ(sylow_subgroup(group("A(6)"), 3).count(), 9u);
  EXPECT_EQ(exponent(s4), 12u);
}

TEST(Subgroups, ClosureAndNormality) {
  const auto& s4 = group("S(4)");
  const auto v4 = closure(s4, {*s4.find(Permutation::from_cycles("(1 2)(3 4)", 4)),
                               *s4.find(Permutation::from_cycles("(1 3)(2 4)", 4))});
  EXPECT_EQ(v4.count(), 4u);
  EXPECT_TRUE(is_subgroup(s4, v4));
  EXPECT_TRUE(is_normal(s4, v4));
  EXPECT_EQ(normalizer(s4, v4).count(), 24u);
  EXPECT_EQ(centralizer(s4, v4).count(), 4u);
  const auto c2 = closure(s4, {*s4.find(Permutation::from_cycles("(1 2)", 4))});
  EXPECT_FALSE(is_normal(s4, c2));
  EXPECT_EQ(normal_closure(s4, c2.indices()).count(), 24u);
  EXPECT_EQ(normalizer(s4, c2).count(), 4u);
}

}  // namespace
}  // namespace grpverify

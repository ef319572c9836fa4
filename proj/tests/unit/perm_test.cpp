#include <gtest/gtest.h>

#include <random>

#include "grpverify/error.hpp"
#include "grpverify/perm.hpp"

namespace grpverify {
namespace {

Permutation cyc(const char* s, std::size_t d) { return Permutation::from_cycles(s, d); }

TEST(Permutation, RightFactorFirst) {
  EXPECT_EQ(compose(cyc("(1 2)", 3), cyc("(2 3)", 3)), cyc("(1 2 3)", 3));
  EXPECT_EQ(cyc("(1 2 3)", 3).to_cycles(), "(1 2 3)");
  EXPECT_EQ(Permutation::identity(4).to_cycles(), "()");
}

TEST(Permutation, OrderAndInverse) {
  const Permutation p = cyc("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
  EXPECT_EQ(p.first_moved(), 0u);
  EXPECT_EQ(Permutation::identity(5).first_moved(), 5u);
}

TEST(Permutation, Malformed) {
  EXPECT_THROW(cyc("(1 2", 3), ParseError);
  EXPECT_THROW(cyc("(1 4)", 3), ParseError);
  EXPECT_THROW(cyc("(1 1)", 3), ParseError);
  EXPECT_THROW(Permutation(std::vector<Permutation::Point>{0, 0}), std::invalid_argument);
}

TEST(Permutation, CycleTextRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Permutation::Point> img(1 + trial % 12);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Permutation::Point>(i);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    EXPECT_EQ(cyc(p.to_cycles().c_str(), p.degree()), p);
  }
}

TEST(PermGroup, Orders) {
  EXPECT_EQ(PermGroup({cyc("(1 2 3 4 5)", 5), cyc("(1 2)", 5)}, 5).order(), 120);
  EXPECT_EQ(PermGroup({cyc("(1 2 3)", 5), cyc("(3 4 5)", 5)}, 5).order(), 60);
  EXPECT_EQ(PermGroup({Permutation::identity(3)}, 3).order(), 1);
  std::vector<Permutation> sn;
  for (std::size_t i = 1; i < 10; ++i)
    sn.push_back(cyc(("(" + std::to_string(i) + " " + std::to_string(i + 1) + ")").c_str(), 10));
  EXPECT_EQ(PermGroup(sn, 10).order(), 3628800);
}

TEST(PermGroup, Membership) {
  const PermGroup a5({cyc("(1 2 3)", 5), cyc("(3 4 5)", 5)}, 5);
  EXPECT_TRUE(a5.contains(cyc("(1 2)(3 4)", 5)));
  EXPECT_FALSE(a5.contains(cyc("(1 2)", 5)));
}

TEST(PermGroup, RejectsMismatchedDegree) {
  EXPECT_THROW(PermGroup({cyc("(1 2)", 3)}, 4), std::invalid_argument);
  EXPECT_THROW(PermGroup({}, 0), std::invalid_argument);
}

}  // namespace
}  // namespace grpverify

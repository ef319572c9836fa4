#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "grpverify/numeric.hpp"
#include "grpverify/smallgroup.hpp"

namespace grpverify {

inline constexpr std::size_t kDefaultSubgroupCap = 2000;
inline constexpr std::size_t kDefaultIsoCap = 2000;

// Sorted by order, then canonical bit order; trivial first, whole group last.
std::vector<ElementSet> normal_subgroups(const MaterializedGroup& m);

struct SubgroupClass {
  ElementSet representative;  // canonical-least member of the class
  std::size_t order = 0;
  std::size_t class_size = 0;
};

// One representative per conjugacy class, sorted by order then canonical order.
std::vector<SubgroupClass> subgroups_up_to_conjugacy(const MaterializedGroup& m,
                                                     std::size_t cap = kDefaultSubgroupCap);
// Every subgroup, found by extension without conjugacy reduction.
std::vector<ElementSet> all_subgroups(const MaterializedGroup& m,
                                      std::size_t cap = kDefaultSubgroupCap);
// Members of the conjugacy class of a subgroup.
std::vector<ElementSet> conjugacy_class_of(const MaterializedGroup& m, const ElementSet& s);

struct JAnalysis {
  std::uint64_t p = 0;
  std::uint64_t order = 0;
  std::uint64_t p_part = 0;
  std::uint64_t min_index = 0;
  ElementSet witness;
  Rational j_ratio;
};

JAnalysis j_analysis(const MaterializedGroup& m, std::uint64_t p);
JAnalysis j_analysis(const MaterializedGroup& m, std::uint64_t p,
                     const std::vector<ElementSet>& normals);

struct SweepEntry {
  ElementSet representative;
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::uint64_t p_part = 0;
  std::uint64_t min_index = 0;
  Rational j_ratio;
  bool order_bound = true;  // |H| <= J |H_(p)|^3
  bool j_bound = true;      // min_index <= J |H_(p)|^3
  bool predicted = false;   // matched the exception predicate
};

struct SweepReport {
  std::uint64_t p = 0;
  Rational bound;
  std::vector<SweepEntry> entries;
  std::vector<std::size_t> j_failures;      // indices into entries
  std::vector<std::size_t> order_failures;  // indices into entries
  bool pass = true;  // every j-bound failure matches the predicate
};

using SubgroupPredicate = std::function<bool(const MaterializedGroup& sub)>;

SweepReport sweep_bound(const MaterializedGroup& m, std::uint64_t p, const Rational& bound,
                        const std::vector<SubgroupClass>& classes,
                        const SubgroupPredicate& exceptions = {}, std::size_t jobs = 1);
SweepReport sweep_bound(const MaterializedGroup& m, std::uint64_t p, const Rational& bound,
                        const SubgroupPredicate& exceptions = {}, std::size_t jobs = 1,
                        std::size_t cap = kDefaultSubgroupCap);

// Faithful action on the cosets of N; throws CapExceeded if |G/N| > cap.
MaterializedGroup quotient(const MaterializedGroup& m, const ElementSet& n,
                           std::size_t cap = kDefaultIsoCap);

bool is_isomorphic(const MaterializedGroup& a, const MaterializedGroup& b,
                   std::size_t cap = kDefaultIsoCap);

}  // namespace grpverify

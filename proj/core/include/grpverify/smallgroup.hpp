#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "grpverify/perm.hpp"

namespace grpverify {

// Subset of a materialized group's element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  static ElementSet from_indices(std::size_t universe, const std::vector<std::uint32_t>& idx);

  std::size_t universe() const { return n_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const;
  std::vector<std::uint32_t> indices() const;
  bool subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  std::size_t hash() const;
  // Canonical order: the set holding the smallest element of the symmetric
  // difference comes first.
  bool canonical_less(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// All elements of a permutation group, indexed with the identity at 0.
class MaterializedGroup {
 public:
  using Index = std::uint32_t;
  static constexpr std::size_t kDefaultCap = 50000;
  static constexpr std::size_t kTableLimit = 2048;

  // Breadth-first closure; throws CapExceeded past cap elements.
  MaterializedGroup(const std::vector<Permutation>& generators, std::size_t degree,
                    std::size_t cap = kDefaultCap);
  static MaterializedGroup materialize(const PermGroup& g, std::size_t cap = kDefaultCap);

  std::size_t order() const { return n_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Index>& generators() const { return gens_; }

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inv_[a]; }
  Index pow(Index a, long long e) const;
  // g^-1 x g
  Index conj(Index x, Index g) const { return mul(inv_[g], mul(x, g)); }
  std::size_t element_order(Index a) const { return orders_[a]; }

  Permutation element(Index a) const;
  std::optional<Index> find(const Permutation& p) const;

  ElementSet all() const;
  ElementSet trivial() const;

  // The subgroup S as a standalone group; parent_index maps back into this one.
  MaterializedGroup subgroup(const ElementSet& s) const;
  const std::vector<Index>& parent_index() const { return parent_; }

 private:
  MaterializedGroup() = default;
  const std::uint16_t* row(Index a) const { return data_.data() + static_cast<std::size_t>(a) * degree_; }
  std::optional<Index> lookup(const std::uint16_t* images) const;
  void insert_slot(Index a);
  static std::size_t hash_row(const std::uint16_t* images, std::size_t degree);
  void build(const std::vector<Permutation>& generators, std::size_t cap);

  std::size_t degree_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint16_t> data_;
  std::vector<Index> slots_;  // open addressing, 0 = empty, otherwise index + 1
  std::vector<Index> gens_;
  std::vector<Index> inv_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint16_t> table_;  // full product table when n_ <= kTableLimit
  std::vector<Index> parent_;
};

using Index = MaterializedGroup::Index;

// Subgroup generated by gens.
ElementSet closure(const MaterializedGroup& m, const std::vector<Index>& gens);
// <H, g> given H as a subgroup with the listed elements and generators.
ElementSet extend_closure(const MaterializedGroup& m, const ElementSet& h,
                          const std::vector<Index>& h_elements,
                          const std::vector<Index>& h_gens, Index g);
// A small generating set of the subgroup s (greedy, ascending indices).
std::vector<Index> subgroup_generators(const MaterializedGroup& m, const ElementSet& s);

bool is_subgroup(const MaterializedGroup& m, const ElementSet& s);
bool is_normal(const MaterializedGroup& m, const ElementSet& s);
bool is_abelian(const MaterializedGroup& m, const ElementSet& s);
bool is_abelian(const MaterializedGroup& m);
bool is_cyclic(const MaterializedGroup& m, const ElementSet& s);

// Classes as sorted index lists; the identity class first, then by least element.
std::vector<std::vector<Index>> conjugacy_classes(const MaterializedGroup& m);
// Class size of every element.
std::vector<std::size_t> class_sizes(const MaterializedGroup& m);

ElementSet center(const MaterializedGroup& m);
ElementSet centralizer(const MaterializedGroup& m, const ElementSet& s);
ElementSet normalizer(const MaterializedGroup& m, const ElementSet& s);
ElementSet normal_closure(const MaterializedGroup& m, const std::vector<Index>& gens);
ElementSet derived_subgroup(const MaterializedGroup& m);
ElementSet derived_subgroup(const MaterializedGroup& m, const ElementSet& s);
// Conjugate s^g = {g^-1 x g}.
ElementSet conjugate(const MaterializedGroup& m, const ElementSet& s, Index g);

ElementSet sylow_subgroup(const MaterializedGroup& m, std::uint64_t p);

std::size_t exponent(const MaterializedGroup& m);

}  // namespace grpverify

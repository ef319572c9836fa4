#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grpverify/smallgroup.hpp"

namespace grpverify {

inline constexpr std::size_t kDefaultAutCap = 1000;

// Automorphisms stored as permutations of element indices.
struct AutGroup {
  std::vector<std::vector<Index>> automorphisms;  // sorted; identity first
  std::size_t inner_order = 0;
  std::size_t out_order = 0;

  std::size_t order() const { return automorphisms.size(); }
  // Aut(G) as a permutation group on |G| points.
  MaterializedGroup as_group() const;
};

// Throws CapExceeded if |G| > cap.
AutGroup automorphism_group(const MaterializedGroup& m, std::size_t cap = kDefaultAutCap,
                            std::size_t jobs = 1);

std::vector<Index> inner_automorphism(const MaterializedGroup& m, Index g);

// Automorphisms that map f onto itself.
std::vector<std::vector<Index>> automorphisms_preserving(const AutGroup& aut, const ElementSet& f);

bool preserved_by_all(const std::vector<std::vector<Index>>& automorphisms, const ElementSet& s);

bool is_characteristic(const AutGroup& aut, const ElementSet& s);

enum class CharStatus { Characteristic, NotCharacteristic, Untested };

struct CharVerdict {
  CharStatus status = CharStatus::Untested;
  std::string method;  // "aut", "trivial", "whole", "unique-order", "not-normal", "char-untested"
};

// Full Aut test when |G| <= cap; above it, certificates only: trivial, whole,
// or the unique normal subgroup of its order. Otherwise "char-untested".
CharVerdict characteristic_status(const MaterializedGroup& m, const ElementSet& s,
                                  const std::vector<ElementSet>& normals,
                                  std::size_t cap = kDefaultAutCap);

// Throws CapExceeded if |G| > cap.
bool is_characteristic(const MaterializedGroup& m, const ElementSet& s,
                       std::size_t cap = kDefaultAutCap);

struct ChermakDelgado {
  ElementSet subgroup;
  std::size_t measure = 0;
};

ChermakDelgado chermak_delgado(const MaterializedGroup& m, std::size_t cap = 2000);

}  // namespace grpverify

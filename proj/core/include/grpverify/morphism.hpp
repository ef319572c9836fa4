#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "grpverify/smallgroup.hpp"

namespace grpverify {

// BFS spanning tree of a group over a generating sequence: every element x
// other than the identity is parent[x] * seq[via[x]].
struct GeneratorTree {
  std::vector<Index> seq;
  std::vector<Index> order;  // BFS order, identity first
  std::vector<Index> parent;
  std::vector<std::uint32_t> via;
};

// Greedy generating sequence: elements in descending element order (ties by
// index), trying first for a single generator, then a pair with the first
// element, then accumulating.
std::vector<Index> generating_sequence(const MaterializedGroup& m);

GeneratorTree generator_tree(const MaterializedGroup& m, const std::vector<Index>& seq);

// Extends seq[i] -> images[i] along the tree and checks the homomorphism
// relations phi(x * s) = phi(x) * phi(s). Returns the map or nullopt.
std::optional<std::vector<Index>> extend_homomorphism(const MaterializedGroup& src,
                                                      const GeneratorTree& tree,
                                                      const MaterializedGroup& dst,
                                                      const std::vector<Index>& images);

bool is_bijective_map(const std::vector<Index>& map, std::size_t target_size);

// Backtracking over images of tree.seq in dst, candidates restricted to equal
// element order and class size, pruned by orders of pairwise products.
// Calls visit for every bijective homomorphism; stops when visit returns false.
void search_isomorphisms(const MaterializedGroup& src, const GeneratorTree& tree,
                         const MaterializedGroup& dst,
                         const std::function<bool(const std::vector<Index>&)>& visit,
                         std::optional<Index> first_image = std::nullopt);

}  // namespace grpverify

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "grpverify/expr.hpp"
#include "grpverify/gf.hpp"
#include "grpverify/perm.hpp"
#include "grpverify/smallgroup.hpp"

namespace grpverify {

// Square matrix over F_p, row-major.
struct Matrix {
  int p = 2;
  std::size_t dim = 0;
  std::vector<int> entries;

  int at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
};

struct BuildOptions {
  std::size_t max_order = MaterializedGroup::kDefaultCap;
};

// A constructed group: generators, stabilizer chain, and a lazily built
// materialization shared between copies.
class GroupHandle {
 public:
  GroupHandle(std::string name, std::vector<Permutation> generators, std::size_t degree);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return perm_->degree(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const PermGroup& perm_group() const { return *perm_; }
  std::uint64_t order() const;

  // Materialized once, on first use; throws CapExceeded above cap.
  const MaterializedGroup& materialized(std::size_t cap = MaterializedGroup::kDefaultCap) const;

  // Semidirect products record N and H generators; products record factors.
  std::vector<Permutation> normal_generators;
  std::vector<Permutation> complement_generators;
  // Matrix groups over a prime field carry one matrix per generator.
  std::optional<std::vector<Matrix>> matrices;

  // Subgroup of the materialization generated by the given permutations.
  ElementSet generated(const std::vector<Permutation>& perms) const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<MaterializedGroup> group;
  };
  std::string name_;
  std::vector<Permutation> gens_;
  std::shared_ptr<PermGroup> perm_;
  std::shared_ptr<Cache> cache_;
};

GroupHandle build(const GroupExpr& e, const BuildOptions& opts = {});
GroupHandle build(const std::string& src, const BuildOptions& opts = {});

struct ProjectiveLine {
  const Field* field = nullptr;
  // points[i] = (x, y) normalized: (x:1) for i < q, (1:0) for i == q.
  std::vector<std::pair<int, int>> points;
  // Action of [[a,b],[c,d]] on column vectors; throws std::invalid_argument
  // for singular matrices.
  Permutation matrix_to_permutation(int a, int b, int c, int d) const;
  std::size_t point_index(int x, int y) const;
};

ProjectiveLine projective_line_action(const Field& f);

// Frobenius x -> x^p on P^1(F_q), as a point permutation.
Permutation frobenius_on_line(const ProjectiveLine& line);

GroupHandle heisenberg_sl23(const BuildOptions& opts = {});

// Semidirect product N ⋊ H where H's i-th generator acts on N as autos[i], a
// permutation of N's element indices. Throws std::invalid_argument if the
// maps are not automorphisms or do not define a homomorphism H -> Aut(N).
GroupHandle semidirect_by_automorphisms(const std::string& name, const GroupHandle& n,
                                        const GroupHandle& h,
                                        const std::vector<std::vector<Index>>& autos,
                                        const BuildOptions& opts = {});

// Closed-form order of a catalog expression where one exists.
std::optional<std::uint64_t> catalog_order(const GroupExpr& e);

}  // namespace grpverify

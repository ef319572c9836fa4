#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grpverify/ledger.hpp"

namespace grpverify::claims {

// Constants indexed by prime; the entry for 7 covers every p >= 7.
using Table = std::map<std::uint64_t, Rational>;

Rational at(const Table& t, std::uint64_t p);
Rational rat(long long num, long long den = 1);
std::string fmt_table(const Table& t);

std::uint64_t p_cube(std::uint64_t order, std::uint64_t p);
Rational ratio(std::uint64_t index, std::uint64_t order, std::uint64_t p);

std::string fmt_set(const std::set<std::uint64_t>& s);
std::string describe(const MaterializedGroup& m, const ElementSet& s);

// Elements of s whose order is coprime to p, when they form a subgroup.
std::optional<ElementSet> coprime_part(const MaterializedGroup& m, const ElementSet& s,
                                       std::uint64_t p);

bool coprime(std::uint64_t n, std::uint64_t p);

struct CharSearch {
  ElementSet subgroup;
  std::size_t index = 0;
  std::size_t uncertified = 0;  // smaller candidates whose status stayed open
};

// Smallest-index normal subgroup of order coprime to p that is abelian (or
// cyclic) and preserved by the given automorphisms; with no automorphisms,
// certificates from characteristic_status are used.
CharSearch min_preserved(const MaterializedGroup& m, std::uint64_t p,
                         const std::vector<ElementSet>& normals, bool cyclic_only,
                         const std::vector<std::vector<Index>>* autos, std::size_t aut_cap);

// Smallest index of an abelian subgroup, from one subgroup per class.
std::size_t min_abelian_index(const MaterializedGroup& m, const std::vector<SubgroupClass>& cls);

// Smallest k >= 1 with sigma^k inner, maximized over Aut(G).
std::size_t max_outer_order(const MaterializedGroup& m, const AutGroup& aut);

// Out(G) = Aut(G)/Inn(G) as a standalone group.
MaterializedGroup outer_group(const MaterializedGroup& m, const AutGroup& aut);

std::vector<Index> compose_maps(const std::vector<Index>& a, const std::vector<Index>& b);
bool is_inner(const MaterializedGroup& m, const std::vector<Index>& sigma);

Expectation ex(std::string key, std::string value);
Expectation ex(std::string key, const Rational& value);
Expectation ex(std::string key, std::uint64_t value);
Expectation ex_bool(std::string key, bool value);

// Corpus of small groups spanning every constructor.
const std::vector<std::string>& small_corpus();

void add_examples(std::vector<ClaimRecord>& out);
void add_structure(std::vector<ClaimRecord>& out);
void add_sweeps(std::vector<ClaimRecord>& out);
void add_psl(std::vector<ClaimRecord>& out);
void add_extensions(std::vector<ClaimRecord>& out);
void add_constants(std::vector<ClaimRecord>& out);

}  // namespace grpverify::claims

#pragma once

// Brute-force reference computations used to cross-check the engine. They
// only read the multiplication table and never call the lattice code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "grpverify/ledger.hpp"
#include "grpverify/smallgroup.hpp"

namespace grpverify::testing {

inline Index identity_of(const MaterializedGroup& m) {
  for (Index i = 0; i < m.order(); ++i)
    if (m.element_order(i) == 1) return i;
  throw std::logic_error("no identity");
}

// Every subgroup, found by testing each subset that contains the identity and
// has size dividing |G| for closure under multiplication. Orders up to 24.
inline std::vector<ElementSet> power_set_subgroups(const MaterializedGroup& m) {
  const std::size_t n = m.order();
  if (n > 24) throw std::invalid_argument("power-set oracle limited to order 24");
  // Bit 0 is the identity; bit k + 1 is the k-th non-identity element.
  const Index e = identity_of(m);
  std::vector<Index> at;
  at.push_back(e);
  for (Index i = 0; i < n; ++i)
    if (i != e) at.push_back(i);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[at[k]] = k;

  // image[a][chunk][byte]: left multiplication by a applied to 8 bits at a time.
  const std::size_t chunks = (n + 7) / 8;
  std::vector<std::uint32_t> image(n * chunks * 256, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < chunks; ++c)
      for (std::uint32_t byte = 0; byte < 256; ++byte) {
        std::uint32_t out = 0;
        for (std::size_t b = 0; b < 8; ++b) {
          const std::size_t k = c * 8 + b;
          if (((byte >> b) & 1u) && k < n) out |= 1u << pos[m.mul(at[a], at[k])];
        }
        image[(a * chunks + c) * 256 + byte] = out;
      }

  std::vector<ElementSet> found;
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t rest = 0; rest < limit; ++rest) {
    const std::uint32_t s = (rest << 1) | 1u;
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (n % size != 0) continue;
    bool closed = true;
    for (std::uint32_t bits = s; bits && closed; bits &= bits - 1) {
      const std::size_t a = static_cast<std::size_t>(std::countr_zero(bits));
      std::uint32_t prod = 0;
      for (std::size_t c = 0; c < chunks; ++c) prod |= image[(a * chunks + c) * 256 + ((s >> (8 * c)) & 0xffu)];
      closed = (prod & ~s) == 0;
    }
    if (!closed) continue;
    ElementSet set(n);
    for (std::size_t k = 0; k < n; ++k)
      if ((s >> k) & 1u) set.set(at[k]);
    found.push_back(set);
  }
  return found;
}

inline bool brute_is_normal(const MaterializedGroup& m, const ElementSet& s) {
  for (Index g = 0; g < m.order(); ++g)
    for (Index x : s.indices())
      if (!s.test(m.mul(m.inv(g), m.mul(x, g)))) return false;
  return true;
}

inline bool brute_is_abelian(const MaterializedGroup& m, const ElementSet& s) {
  const auto idx = s.indices();
  for (Index a : idx)
    for (Index b : idx)
      if (m.mul(a, b) != m.mul(b, a)) return false;
  return true;
}

inline std::size_t brute_centralizer_order(const MaterializedGroup& m, const ElementSet& s) {
  std::size_t c = 0;
  const auto idx = s.indices();
  for (Index g = 0; g < m.order(); ++g)
    if (std::all_of(idx.begin(), idx.end(), [&](Index x) { return m.mul(g, x) == m.mul(x, g); })) ++c;
  return c;
}

// Class sizes by direct conjugation of every element.
inline std::vector<std::size_t> brute_class_sizes(const MaterializedGroup& m) {
  std::vector<bool> seen(m.order(), false);
  std::vector<std::size_t> sizes;
  for (Index x = 0; x < m.order(); ++x) {
    if (seen[x]) continue;
    std::size_t size = 0;
    for (Index g = 0; g < m.order(); ++g) {
      const Index y = m.mul(m.inv(g), m.mul(x, g));
      if (!seen[y]) {
        seen[y] = true;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

// Group expressions exercised by the structural claims.
inline std::vector<std::string> corpus() {
  for (const auto& c : builtin_claims())
    if (c.id == "THM-3.2") return c.groups;
  throw std::logic_error("corpus claim missing");
}

}  // namespace grpverify::testing

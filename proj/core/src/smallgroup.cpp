#include "grpverify/smallgroup.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>

#include "grpverify/deadline.hpp"
#include "grpverify/error.hpp"

namespace grpverify {

ElementSet::ElementSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::from_indices(std::size_t universe, const std::vector<std::uint32_t>& idx) {
  ElementSet s(universe);
  for (std::uint32_t i : idx) s.set(i);
  return s;
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::uint32_t> ElementSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= other.words_[w];
  return r;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= other.words_[w];
  return r;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool ElementSet::canonical_less(const ElementSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t x = words_[w] ^ other.words_[w];
    if (x == 0) continue;
    const std::uint64_t low = x & (~x + 1);
    return (words_[w] & low) != 0;
  }
  return false;
}

std::size_t MaterializedGroup::hash_row(const std::uint16_t* images, std::size_t degree) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < degree; ++i) {
    h ^= images[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::optional<Index> MaterializedGroup::lookup(const std::uint16_t* images) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash_row(images, degree_) & mask;
  for (;;) {
    const Index s = slots_[pos];
    if (s == 0) return std::nullopt;
    if (std::memcmp(row(s - 1), images, degree_ * sizeof(std::uint16_t)) == 0) return s - 1;
    pos = (pos + 1) & mask;
  }
}

void MaterializedGroup::insert_slot(Index a) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash_row(row(a), degree_) & mask;
  while (slots_[pos] != 0) pos = (pos + 1) & mask;
  slots_[pos] = a + 1;
}

MaterializedGroup::MaterializedGroup(const std::vector<Permutation>& generators, std::size_t degree,
                                     std::size_t cap)
    : degree_(degree) {
  build(generators, cap);
}

MaterializedGroup MaterializedGroup::materialize(const PermGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("group order " + g.order().str() + " exceeds materialization cap " +
                      std::to_string(cap));
  }
  return MaterializedGroup(g.generators(), g.degree(), cap);
}

void MaterializedGroup::build(const std::vector<Permutation>& generators, std::size_t cap) {
  if (degree_ == 0) throw std::invalid_argument("empty domain");
  for (const Permutation& g : generators)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");

  slots_.assign(1024, 0);
  const Permutation id = Permutation::identity(degree_);
  data_.insert(data_.end(), id.images().begin(), id.images().end());
  n_ = 1;
  insert_slot(0);

  std::vector<Index> from;
  std::vector<std::uint32_t> via;
  from.push_back(0);
  via.push_back(0);
  std::vector<std::uint16_t> buf(degree_);
  for (std::size_t i = 0; i < n_; ++i) {
    if ((i & 0x3ff) == 0) check_deadline();
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const auto& gi = generators[j].images();
      const std::uint16_t* x = row(static_cast<Index>(i));
      for (std::size_t p = 0; p < degree_; ++p) buf[p] = x[gi[p]];
      if (lookup(buf.data())) continue;
      if (n_ >= cap) {
        throw CapExceeded("group order exceeds materialization cap " + std::to_string(cap));
      }
      data_.insert(data_.end(), buf.begin(), buf.end());
      ++n_;
      if (2 * n_ > slots_.size()) {
        slots_.assign(slots_.size() * 2, 0);
        for (Index a = 0; a < n_; ++a) insert_slot(a);
      } else {
        insert_slot(static_cast<Index>(n_ - 1));
      }
      from.push_back(static_cast<Index>(i));
      via.push_back(static_cast<std::uint32_t>(j));
    }
  }

  std::vector<Index> gen_index;
  for (const Permutation& g : generators) {
    const Index gi = *lookup(g.images().data());
    gen_index.push_back(gi);
    if (gi != 0 && std::find(gens_.begin(), gens_.end(), gi) == gens_.end()) gens_.push_back(gi);
  }

  inv_.assign(n_, 0);
  orders_.assign(n_, 1);
  for (Index a = 0; a < n_; ++a) {
    const std::uint16_t* x = row(a);
    for (std::size_t p = 0; p < degree_; ++p) buf[x[p]] = static_cast<std::uint16_t>(p);
    inv_[a] = *lookup(buf.data());
    orders_[a] = static_cast<std::uint32_t>(element(a).order());
  }

  if (n_ <= kTableLimit) {
    // Right multiplication by each generator, then every product through the
    // BFS tree: b = from[b] * g_via[b].
    std::vector<Index> by_gen(n_ * generators.size());
    for (Index a = 0; a < n_; ++a) {
      const std::uint16_t* x = row(a);
      for (std::size_t j = 0; j < generators.size(); ++j) {
        const auto& gi = generators[j].images();
        for (std::size_t p = 0; p < degree_; ++p) buf[p] = x[gi[p]];
        by_gen[a * generators.size() + j] = *lookup(buf.data());
      }
    }
    table_.assign(n_ * n_, 0);
    for (Index a = 0; a < n_; ++a) {
      std::uint16_t* t = table_.data() + static_cast<std::size_t>(a) * n_;
      t[0] = static_cast<std::uint16_t>(a);
      for (Index b = 1; b < n_; ++b) {
        t[b] = static_cast<std::uint16_t>(by_gen[static_cast<std::size_t>(t[from[b]]) * generators.size() + via[b]]);
      }
    }
  }
}

Index MaterializedGroup::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
  thread_local std::vector<std::uint16_t> buf;
  buf.resize(degree_);
  const std::uint16_t* x = row(a);
  const std::uint16_t* y = row(b);
  for (std::size_t p = 0; p < degree_; ++p) buf[p] = x[y[p]];
  return *lookup(buf.data());
}

Index MaterializedGroup::pow(Index a, long long e) const {
  if (e < 0) {
    a = inv_[a];
    e = -e;
  }
  Index r = 0;
  Index b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Permutation MaterializedGroup::element(Index a) const {
  const std::uint16_t* x = row(a);
  return Permutation(std::vector<Permutation::Point>(x, x + degree_));
}

std::optional<Index> MaterializedGroup::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  return lookup(p.images().data());
}

ElementSet MaterializedGroup::all() const {
  ElementSet s(n_);
  for (std::size_t i = 0; i < n_; ++i) s.set(i);
  return s;
}

ElementSet MaterializedGroup::trivial() const {
  ElementSet s(n_);
  s.set(0);
  return s;
}

MaterializedGroup MaterializedGroup::subgroup(const ElementSet& s) const {
  std::vector<Permutation> perms;
  for (Index g : subgroup_generators(*this, s)) perms.push_back(element(g));
  MaterializedGroup sub(perms, degree_, n_ + 1);
  sub.parent_.resize(sub.n_);
  for (Index a = 0; a < sub.n_; ++a) sub.parent_[a] = *lookup(sub.row(a));
  return sub;
}

ElementSet closure(const MaterializedGroup& m, const std::vector<Index>& gens) {
  ElementSet s = m.trivial();
  std::vector<Index> elems{0};
  std::vector<Index> used;
  for (Index g : gens) {
    if (s.test(g)) continue;
    s = extend_closure(m, s, elems, used, g);
    used.push_back(g);
    elems = s.indices();
  }
  return s;
}

ElementSet extend_closure(const MaterializedGroup& m, const ElementSet& h,
                          const std::vector<Index>& h_elements,
                          const std::vector<Index>& h_gens, Index g) {
  if (h.test(g)) return h;
  ElementSet k = h;
  std::vector<Index> gens = h_gens;
  gens.push_back(g);
  std::vector<Index> reps{0};
  std::size_t tick = 0;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Index s : gens) {
      const Index t = m.mul(reps[r], s);
      if (k.test(t)) continue;
      if ((++tick & 0x3f) == 0) check_deadline();
      for (Index x : h_elements) k.set(m.mul(x, t));
      reps.push_back(t);
    }
  }
  return k;
}

std::vector<Index> subgroup_generators(const MaterializedGroup& m, const ElementSet& s) {
  std::vector<Index> gens;
  ElementSet cur = m.trivial();
  std::vector<Index> elems{0};
  for (Index i : s.indices()) {
    if (cur.test(i)) continue;
    cur = extend_closure(m, cur, elems, gens, i);
    gens.push_back(i);
    elems = cur.indices();
  }
  return gens;
}

bool is_subgroup(const MaterializedGroup& m, const ElementSet& s) {
  if (!s.test(0)) return false;
  const auto idx = s.indices();
  for (Index a : idx)
    for (Index b : idx)
      if (!s.test(m.mul(a, b))) return false;
  return true;
}

bool is_normal(const MaterializedGroup& m, const ElementSet& s) {
  for (Index x : s.indices())
    for (Index g : m.generators())
      if (!s.test(m.conj(x, g))) return false;
  return true;
}

bool is_abelian(const MaterializedGroup& m, const ElementSet& s) {
  const auto gens = subgroup_generators(m, s);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (m.mul(gens[i], gens[j]) != m.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_abelian(const MaterializedGroup& m) {
  const auto& g = m.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (m.mul(g[i], g[j]) != m.mul(g[j], g[i])) return false;
  return true;
}

bool is_cyclic(const MaterializedGroup& m, const ElementSet& s) {
  const std::size_t n = s.count();
  for (Index a : s.indices())
    if (m.element_order(a) == n) return true;
  return false;
}

std::vector<std::vector<Index>> conjugacy_classes(const MaterializedGroup& m) {
  std::vector<char> seen(m.order(), 0);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < m.order(); ++x) {
    if (seen[x]) continue;
    check_deadline();
    std::vector<Index> cls{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Index g : m.generators()) {
        const Index y = m.conj(cls[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> class_sizes(const MaterializedGroup& m) {
  std::vector<std::size_t> sizes(m.order(), 0);
  for (const auto& cls : conjugacy_classes(m))
    for (Index x : cls) sizes[x] = cls.size();
  return sizes;
}

ElementSet centralizer(const MaterializedGroup& m, const ElementSet& s) {
  const auto gens = subgroup_generators(m, s);
  ElementSet c(m.order());
  for (Index x = 0; x < m.order(); ++x) {
    bool ok = true;
    for (Index g : gens) {
      if (m.mul(x, g) != m.mul(g, x)) {
        ok = false;
        break;
      }
    }
    if (ok) c.set(x);
  }
  return c;
}

ElementSet center(const MaterializedGroup& m) { return centralizer(m, m.all()); }

ElementSet normalizer(const MaterializedGroup& m, const ElementSet& s) {
  const auto gens = subgroup_generators(m, s);
  ElementSet nrm(m.order());
  for (Index x = 0; x < m.order(); ++x) {
    bool ok = true;
    for (Index g : gens) {
      if (!s.test(m.conj(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) nrm.set(x);
  }
  return nrm;
}

namespace {

// Closure of gens under conjugation by conj_gens.
ElementSet closure_under_conjugation(const MaterializedGroup& m, std::vector<Index> gens,
                                     const std::vector<Index>& conj_gens) {
  std::vector<Index> ngens;
  ElementSet n = m.trivial();
  std::vector<Index> elems{0};
  auto add = [&](Index y) {
    if (n.test(y)) return;
    n = extend_closure(m, n, elems, ngens, y);
    ngens.push_back(y);
    elems = n.indices();
  };
  for (Index g : gens) add(g);
  for (std::size_t i = 0; i < ngens.size(); ++i)
    for (Index c : conj_gens) add(m.conj(ngens[i], c));
  return n;
}

}  // namespace

ElementSet normal_closure(const MaterializedGroup& m, const std::vector<Index>& gens) {
  return closure_under_conjugation(m, gens, m.generators());
}

ElementSet derived_subgroup(const MaterializedGroup& m, const ElementSet& s) {
  const auto gens = subgroup_generators(m, s);
  std::vector<Index> comms;
  for (Index a : gens)
    for (Index b : gens) {
      const Index c = m.mul(m.mul(m.inv(a), m.inv(b)), m.mul(a, b));
      if (c != 0) comms.push_back(c);
    }
  return closure_under_conjugation(m, comms, gens);
}

ElementSet derived_subgroup(const MaterializedGroup& m) { return derived_subgroup(m, m.all()); }

ElementSet conjugate(const MaterializedGroup& m, const ElementSet& s, Index g) {
  ElementSet r(m.order());
  for (Index x : s.indices()) r.set(m.conj(x, g));
  return r;
}

namespace {
bool is_p_power(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}
}  // namespace

ElementSet sylow_subgroup(const MaterializedGroup& m, std::uint64_t p) {
  const std::uint64_t target = p_part(m.order(), p);
  if (target == 1) return m.trivial();
  Index best = 0;
  for (Index x = 1; x < m.order(); ++x) {
    const std::size_t o = m.element_order(x);
    if (is_p_power(o, p) && o > m.element_order(best)) best = x;
  }
  ElementSet pset = closure(m, {best});
  std::vector<Index> pgens{best};
  while (pset.count() < target) {
    check_deadline();
    const ElementSet nrm = normalizer(m, pset);
    Index pick = 0;
    for (Index y : nrm.indices()) {
      if (!pset.test(y) && is_p_power(m.element_order(y), p)) {
        pick = y;
        break;
      }
    }
    if (pick == 0) throw std::logic_error("Sylow growth stalled");
    pset = extend_closure(m, pset, pset.indices(), pgens, pick);
    pgens.push_back(pick);
  }
  return pset;
}

std::size_t exponent(const MaterializedGroup& m) {
  std::size_t e = 1;
  for (Index a = 0; a < m.order(); ++a) e = std::lcm(e, m.element_order(a));
  return e;
}

}  // namespace grpverify

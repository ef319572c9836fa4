#include "grpverify/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "grpverify/deadline.hpp"
#include "grpverify/error.hpp"
#include "grpverify/morphism.hpp"
#include "grpverify/parallel.hpp"

namespace grpverify {

namespace {

using SetOfSets = std::unordered_set<ElementSet, ElementSetHash>;

bool by_order_then_canonical(const ElementSet& a, const ElementSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  return a.canonical_less(b);
}

ElementSet join(const MaterializedGroup& m, const ElementSet& a, const ElementSet& b) {
  ElementSet k = a;
  std::vector<Index> gens = subgroup_generators(m, a);
  std::vector<Index> elems = a.indices();
  for (Index g : subgroup_generators(m, b)) {
    if (k.test(g)) continue;
    k = extend_closure(m, k, elems, gens, g);
    gens.push_back(g);
    elems = k.indices();
  }
  return k;
}

std::vector<Index> cyclic_representatives(const MaterializedGroup& m) {
  SetOfSets seen;
  std::vector<Index> reps;
  for (Index x = 1; x < m.order(); ++x) {
    if (seen.insert(closure(m, {x})).second) reps.push_back(x);
  }
  return reps;
}

struct Found {
  ElementSet set;
  std::size_t class_size = 1;
};

std::vector<Found> enumerate_subgroups(const MaterializedGroup& m, bool up_to_conjugacy,
                                       std::size_t cap) {
  if (m.order() > cap) {
    throw CapExceeded("subgroup enumeration of order " + std::to_string(m.order()) +
                      " exceeds cap " + std::to_string(cap));
  }
  const std::vector<Index> cyclic = cyclic_representatives(m);
  SetOfSets known;
  std::map<std::size_t, std::vector<Found>> pending;
  std::vector<Found> out;

  known.insert(m.trivial());
  pending[1].push_back({m.trivial(), 1});

  while (!pending.empty()) {
    auto bucket = pending.begin();
    std::vector<Found> layer = std::move(bucket->second);
    pending.erase(bucket);
    for (Found& h : layer) {
      check_deadline();
      const std::vector<Index> hel = h.set.indices();
      const std::vector<Index> hgens = subgroup_generators(m, h.set);
      ElementSet done = h.set;
      for (Index x : cyclic) {
        if (done.test(x)) continue;
        for (Index y : hel) {
          done.set(m.mul(y, x));
          done.set(m.mul(x, y));
        }
        ElementSet k = extend_closure(m, h.set, hel, hgens, x);
        if (known.count(k)) continue;
        const std::size_t order = k.count();
        if (up_to_conjugacy) {
          std::vector<ElementSet> orbit = conjugacy_class_of(m, k);
          ElementSet rep = orbit.front();
          for (const ElementSet& c : orbit) {
            if (c.canonical_less(rep)) rep = c;
            known.insert(c);
          }
          pending[order].push_back({std::move(rep), orbit.size()});
        } else {
          known.insert(k);
          pending[order].push_back({std::move(k), 1});
        }
      }
      out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Found& a, const Found& b) { return by_order_then_canonical(a.set, b.set); });
  return out;
}

}  // namespace

std::vector<ElementSet> conjugacy_class_of(const MaterializedGroup& m, const ElementSet& s) {
  SetOfSets seen{s};
  std::vector<ElementSet> orbit{s};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Index g : m.generators()) {
      ElementSet c = conjugate(m, orbit[i], g);
      if (seen.insert(c).second) orbit.push_back(std::move(c));
    }
  }
  return orbit;
}

std::vector<ElementSet> normal_subgroups(const MaterializedGroup& m) {
  SetOfSets seen;
  std::vector<ElementSet> base;
  for (const auto& cls : conjugacy_classes(m)) {
    if (cls.front() == 0) continue;
    check_deadline();
    ElementSet n = closure(m, cls);
    if (seen.insert(n).second) base.push_back(std::move(n));
  }
  std::vector<ElementSet> all{m.trivial()};
  seen.insert(m.trivial());
  for (const ElementSet& b : base) all.push_back(b);
  for (std::size_t i = 1; i < all.size(); ++i) {
    for (const ElementSet& b : base) {
      check_deadline();
      if (b.subset_of(all[i])) continue;
      ElementSet j = join(m, all[i], b);
      if (seen.insert(j).second) all.push_back(std::move(j));
    }
  }
  std::sort(all.begin(), all.end(), by_order_then_canonical);
  return all;
}

std::vector<SubgroupClass> subgroups_up_to_conjugacy(const MaterializedGroup& m, std::size_t cap) {
  std::vector<SubgroupClass> out;
  for (Found& f : enumerate_subgroups(m, true, cap)) {
    const std::size_t order = f.set.count();
    out.push_back({std::move(f.set), order, f.class_size});
  }
  return out;
}

std::vector<ElementSet> all_subgroups(const MaterializedGroup& m, std::size_t cap) {
  std::vector<ElementSet> out;
  for (Found& f : enumerate_subgroups(m, false, cap)) out.push_back(std::move(f.set));
  return out;
}

JAnalysis j_analysis(const MaterializedGroup& m, std::uint64_t p) {
  return j_analysis(m, p, normal_subgroups(m));
}

JAnalysis j_analysis(const MaterializedGroup& m, std::uint64_t p,
                     const std::vector<ElementSet>& normals) {
  JAnalysis r;
  r.p = p;
  r.order = m.order();
  r.p_part = p_part(m.order(), p);
  std::size_t best = 0;
  for (const ElementSet& n : normals) {
    const std::size_t c = n.count();
    if (c % p == 0 || c < best) continue;
    if (c == best && !n.canonical_less(r.witness)) continue;
    if (!is_abelian(m, n)) continue;
    best = c;
    r.witness = n;
  }
  r.min_index = m.order() / best;
  r.j_ratio = Rational(r.min_index) / Rational(BigInt(r.p_part) * r.p_part * r.p_part);
  return r;
}

SweepReport sweep_bound(const MaterializedGroup& m, std::uint64_t p, const Rational& bound,
                        const std::vector<SubgroupClass>& classes,
                        const SubgroupPredicate& exceptions, std::size_t jobs) {
  SweepReport rep;
  rep.p = p;
  rep.bound = bound;
  rep.entries.resize(classes.size());
  parallel_for(classes.size(), jobs, [&](std::size_t i) {
    check_deadline();
    const MaterializedGroup sub = m.subgroup(classes[i].representative);
    const JAnalysis ja = j_analysis(sub, p);
    SweepEntry& e = rep.entries[i];
    e.representative = classes[i].representative;
    e.order = classes[i].order;
    e.class_size = classes[i].class_size;
    e.p_part = ja.p_part;
    e.min_index = ja.min_index;
    e.j_ratio = ja.j_ratio;
    const Rational limit = bound * Rational(BigInt(ja.p_part) * ja.p_part * ja.p_part);
    e.order_bound = Rational(e.order) <= limit;
    e.j_bound = Rational(e.min_index) <= limit;
    if (!e.j_bound && exceptions) e.predicted = exceptions(sub);
  });
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    if (!rep.entries[i].order_bound) rep.order_failures.push_back(i);
    if (!rep.entries[i].j_bound) {
      rep.j_failures.push_back(i);
      if (!rep.entries[i].predicted) rep.pass = false;
    }
  }
  return rep;
}

SweepReport sweep_bound(const MaterializedGroup& m, std::uint64_t p, const Rational& bound,
                        const SubgroupPredicate& exceptions, std::size_t jobs, std::size_t cap) {
  return sweep_bound(m, p, bound, subgroups_up_to_conjugacy(m, cap), exceptions, jobs);
}

MaterializedGroup quotient(const MaterializedGroup& m, const ElementSet& n, std::size_t cap) {
  if (!is_subgroup(m, n) || !is_normal(m, n)) throw std::invalid_argument("not a normal subgroup");
  const std::size_t k = m.order() / n.count();
  if (k > cap) {
    throw CapExceeded("quotient of order " + std::to_string(k) + " exceeds cap " +
                      std::to_string(cap));
  }
  const auto nel = n.indices();
  std::vector<std::uint32_t> coset(m.order(), UINT32_MAX);
  std::vector<Index> reps;
  for (Index x = 0; x < m.order(); ++x) {
    if (coset[x] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Index y : nel) coset[m.mul(y, x)] = id;
  }
  std::vector<Permutation> gens;
  for (Index g : m.generators()) {
    std::vector<Permutation::Point> im(k);
    for (std::size_t c = 0; c < k; ++c) im[c] = static_cast<Permutation::Point>(coset[m.mul(reps[c], g)]);
    gens.emplace_back(std::move(im));
  }
  return MaterializedGroup(gens, std::max<std::size_t>(k, 1), k + 1);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> profile(const MaterializedGroup& m) {
  const auto cls = class_sizes(m);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (Index x = 0; x < m.order(); ++x) out.emplace_back(m.element_order(x), cls[x]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_isomorphic(const MaterializedGroup& a, const MaterializedGroup& b, std::size_t cap) {
  if (a.order() != b.order()) return false;
  if (a.order() > cap) {
    throw CapExceeded("isomorphism test of order " + std::to_string(a.order()) +
                      " exceeds cap " + std::to_string(cap));
  }
  if (is_abelian(a) != is_abelian(b)) return false;
  if (profile(a) != profile(b)) return false;
  if (center(a).count() != center(b).count()) return false;
  if (derived_subgroup(a).count() != derived_subgroup(b).count()) return false;
  const GeneratorTree tree = generator_tree(a, generating_sequence(a));
  bool found = false;
  search_isomorphisms(a, tree, b, [&](const std::vector<Index>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace grpverify

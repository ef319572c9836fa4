#include "grpverify/autmorph.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "grpverify/deadline.hpp"
#include "grpverify/error.hpp"
#include "grpverify/lattice.hpp"
#include "grpverify/morphism.hpp"
#include "grpverify/parallel.hpp"

namespace grpverify {

namespace {
constexpr std::size_t kMaxStoredEntries = 50'000'000;
}

MaterializedGroup AutGroup::as_group() const {
  const std::size_t n = automorphisms.front().size();
  auto to_perm = [](const std::vector<Index>& a) {
    return Permutation(std::vector<Permutation::Point>(a.begin(), a.end()));
  };
  std::vector<Permutation> gens;
  MaterializedGroup cur(gens, n, automorphisms.size() + 1);
  for (const auto& a : automorphisms) {
    const Permutation p = to_perm(a);
    if (cur.find(p)) continue;
    gens.push_back(p);
    cur = MaterializedGroup(gens, n, automorphisms.size() + 1);
    if (cur.order() == automorphisms.size()) break;
  }
  return cur;
}

std::vector<Index> inner_automorphism(const MaterializedGroup& m, Index g) {
  std::vector<Index> a(m.order());
  for (Index x = 0; x < m.order(); ++x) a[x] = m.conj(x, g);
  return a;
}

AutGroup automorphism_group(const MaterializedGroup& m, std::size_t cap, std::size_t jobs) {
  if (m.order() > cap) {
    throw CapExceeded("automorphism group of order-" + std::to_string(m.order()) +
                      " group exceeds cap " + std::to_string(cap));
  }
  AutGroup aut;
  const GeneratorTree tree = generator_tree(m, generating_sequence(m));
  if (tree.seq.empty()) {
    aut.automorphisms.push_back({0});
  } else {
    // Split the search over images of the first generator.
    const auto cls = class_sizes(m);
    std::vector<Index> first;
    for (Index y = 0; y < m.order(); ++y)
      if (m.element_order(y) == m.element_order(tree.seq[0]) && cls[y] == cls[tree.seq[0]])
        first.push_back(y);
    std::mutex mu;
    bool overflow = false;
    parallel_for(first.size(), jobs, [&](std::size_t i) {
      std::vector<std::vector<Index>> local;
      search_isomorphisms(
          m, tree, m,
          [&](const std::vector<Index>& phi) {
            local.push_back(phi);
            return local.size() * m.order() < kMaxStoredEntries;
          },
          first[i]);
      std::lock_guard<std::mutex> lock(mu);
      for (auto& a : local) aut.automorphisms.push_back(std::move(a));
      if (aut.automorphisms.size() * m.order() >= kMaxStoredEntries) overflow = true;
    });
    if (overflow) throw CapExceeded("automorphism group too large to store");
    std::sort(aut.automorphisms.begin(), aut.automorphisms.end());
  }
  aut.inner_order = m.order() / center(m).count();
  aut.out_order = aut.automorphisms.size() / aut.inner_order;
  return aut;
}

std::vector<std::vector<Index>> automorphisms_preserving(const AutGroup& aut, const ElementSet& f) {
  std::vector<std::vector<Index>> out;
  const auto idx = f.indices();
  for (const auto& a : aut.automorphisms) {
    bool ok = true;
    for (Index x : idx) {
      if (!f.test(a[x])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

bool preserved_by_all(const std::vector<std::vector<Index>>& automorphisms, const ElementSet& s) {
  const auto idx = s.indices();
  for (const auto& a : automorphisms)
    for (Index x : idx)
      if (!s.test(a[x])) return false;
  return true;
}

bool is_characteristic(const AutGroup& aut, const ElementSet& s) {
  return preserved_by_all(aut.automorphisms, s);
}

CharVerdict characteristic_status(const MaterializedGroup& m, const ElementSet& s,
                                  const std::vector<ElementSet>& normals, std::size_t cap) {
  const std::size_t c = s.count();
  if (c == 1) return {CharStatus::Characteristic, "trivial"};
  if (c == m.order()) return {CharStatus::Characteristic, "whole"};
  if (!is_normal(m, s)) return {CharStatus::NotCharacteristic, "not-normal"};
  if (m.order() <= cap) {
    const AutGroup aut = automorphism_group(m, cap);
    return is_characteristic(aut, s) ? CharVerdict{CharStatus::Characteristic, "aut"}
                                     : CharVerdict{CharStatus::NotCharacteristic, "aut"};
  }
  std::size_t same = 0;
  for (const ElementSet& n : normals)
    if (n.count() == c) ++same;
  if (same == 1) return {CharStatus::Characteristic, "unique-order"};
  return {CharStatus::Untested, "char-untested"};
}

bool is_characteristic(const MaterializedGroup& m, const ElementSet& s, std::size_t cap) {
  const std::size_t c = s.count();
  if (c == 1 || c == m.order()) return true;
  return is_characteristic(automorphism_group(m, cap), s);
}

ChermakDelgado chermak_delgado(const MaterializedGroup& m, std::size_t cap) {
  std::vector<ElementSet> subgroups;
  for (const SubgroupClass& c : subgroups_up_to_conjugacy(m, cap))
    for (ElementSet& s : conjugacy_class_of(m, c.representative)) subgroups.push_back(std::move(s));
  ChermakDelgado cd;
  std::vector<const ElementSet*> best;
  for (const ElementSet& h : subgroups) {
    check_deadline();
    const std::size_t measure = h.count() * centralizer(m, h).count();
    if (measure > cd.measure) {
      cd.measure = measure;
      best.clear();
    }
    if (measure == cd.measure) best.push_back(&h);
  }
  cd.subgroup = *best.front();
  for (const ElementSet* h : best) cd.subgroup = cd.subgroup & *h;
  return cd;
}

}  // namespace grpverify

#include "claims_common.hpp"

#include <algorithm>
#include <numeric>

#include "grpverify/deadline.hpp"

namespace grpverify::claims {

Rational at(const Table& t, std::uint64_t p) {
  auto it = t.find(p >= 7 ? 7 : p);
  if (it == t.end()) throw std::out_of_range("no constant for p = " + std::to_string(p));
  return it->second;
}

Rational rat(long long num, long long den) { return Rational(num) / Rational(den); }

std::string fmt_table(const Table& t) {
  std::string out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (!out.empty()) out += "/";
    out += to_string(it->second);
  }
  return out;
}

std::uint64_t p_cube(std::uint64_t order, std::uint64_t p) {
  const std::uint64_t q = p_part(order, p);
  return q * q * q;
}

Rational ratio(std::uint64_t index, std::uint64_t order, std::uint64_t p) {
  const BigInt q = p_part(order, p);
  return Rational(BigInt(index)) / Rational(q * q * q);
}

std::string fmt_set(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string describe(const MaterializedGroup& m, const ElementSet& s) {
  std::string out = "order " + std::to_string(s.count());
  const auto gens = subgroup_generators(m, s);
  if (gens.empty()) return out;
  out += " <";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += m.element(gens[i]).to_cycles();
  }
  return out + ">";
}

bool coprime(std::uint64_t n, std::uint64_t p) { return n % p != 0; }

std::optional<ElementSet> coprime_part(const MaterializedGroup& m, const ElementSet& s,
                                       std::uint64_t p) {
  ElementSet out(m.order());
  for (Index x : s.indices())
    if (coprime(m.element_order(x), p)) out.set(x);
  if (!is_subgroup(m, out)) return std::nullopt;
  return out;
}

CharSearch min_preserved(const MaterializedGroup& m, std::uint64_t p,
                         const std::vector<ElementSet>& normals, bool cyclic_only,
                         const std::vector<std::vector<Index>>* autos, std::size_t aut_cap) {
  std::optional<AutGroup> own;
  if (!autos && m.order() <= aut_cap) {
    own = automorphism_group(m, aut_cap);
    autos = &own->automorphisms;
  }
  std::vector<const ElementSet*> order;
  for (const auto& n : normals) order.push_back(&n);
  std::stable_sort(order.begin(), order.end(),
                   [](const ElementSet* a, const ElementSet* b) { return a->count() > b->count(); });
  CharSearch out;
  for (const ElementSet* n : order) {
    check_deadline();
    const std::size_t c = n->count();
    if (!coprime(c, p)) continue;
    if (cyclic_only ? !is_cyclic(m, *n) : !is_abelian(m, *n)) continue;
    bool ok = false;
    if (autos) {
      ok = preserved_by_all(*autos, *n);
    } else {
      const CharVerdict v = characteristic_status(m, *n, normals, aut_cap);
      if (v.status == CharStatus::Untested) ++out.uncertified;
      ok = v.status == CharStatus::Characteristic;
    }
    if (ok) {
      out.subgroup = *n;
      out.index = m.order() / c;
      return out;
    }
  }
  throw std::logic_error("no preserved subgroup found; the trivial subgroup always qualifies");
}

std::size_t min_abelian_index(const MaterializedGroup& m, const std::vector<SubgroupClass>& cls) {
  std::size_t best = 0;
  for (const auto& c : cls)
    if (c.order > best && is_abelian(m, c.representative)) best = c.order;
  return m.order() / best;
}

std::vector<Index> compose_maps(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

bool is_inner(const MaterializedGroup& m, const std::vector<Index>& sigma) {
  for (Index g = 0; g < m.order(); ++g) {
    bool same = true;
    for (Index x : m.generators()) {
      if (m.conj(x, g) != sigma[x]) {
        same = false;
        break;
      }
    }
    if (same) return true;
  }
  return false;
}

std::size_t max_outer_order(const MaterializedGroup& m, const AutGroup& aut) {
  std::size_t best = 1;
  for (const auto& sigma : aut.automorphisms) {
    std::vector<Index> power = sigma;
    std::size_t k = 1;
    while (!is_inner(m, power)) {
      power = compose_maps(sigma, power);
      ++k;
    }
    best = std::max(best, k);
  }
  return best;
}

MaterializedGroup outer_group(const MaterializedGroup& m, const AutGroup& aut) {
  const MaterializedGroup a = aut.as_group();
  std::vector<Index> inner;
  for (Index g = 0; g < m.order(); ++g) {
    const auto map = inner_automorphism(m, g);
    std::vector<Permutation::Point> pts(map.begin(), map.end());
    const auto i = a.find(Permutation(std::move(pts)));
    if (!i) throw std::logic_error("inner automorphism missing from Aut(G)");
    inner.push_back(*i);
  }
  return quotient(a, closure(a, inner), a.order());
}

Expectation ex(std::string key, std::string value) { return {std::move(key), std::move(value)}; }
Expectation ex(std::string key, const Rational& value) { return {std::move(key), to_string(value)}; }
Expectation ex(std::string key, std::uint64_t value) {
  return {std::move(key), std::to_string(value)};
}
Expectation ex_bool(std::string key, bool value) {
  return {std::move(key), value ? "true" : "false"};
}

const std::vector<std::string>& small_corpus() {
  static const std::vector<std::string> corpus = {
      "C(1)",
      "C(6)",
      "C(12)",
      "C(30)",
      "D(3)",
      "D(4)",
      "D(5)",
      "D(6)",
      "D(12)",
      "S(3)",
      "S(4)",
      "A(4)",
      "A(5)",
      "EA(2,2)",
      "EA(2,3)",
      "EA(3,2)",
      "EA(2,4)",
      "H3",
      "GL(2,3)",
      "SL(2,3)",
      "PGL(2,3)",
      "PSL(2,3)",
      "PSL(2,5)",
      "GL(2,2)",
      "WD(3)",
      "prod(C(2),S(3))",
      "prod(S(3),S(3))",
      "swapsq(C(3))",
      "swapsq(S(3))",
      "semi(C(7),C(3),explicit[2])",
      "semi(C(3),C(4),inv)",
      "semi(C(5),C(4),explicit[2])",
      "semi(EA(2,3),C(7),explicit[0 0 1 1 0 1 0 1 0])",
      "semi(EA(3,2),C(8),explicit[1 2 1 1])",
      "pgroup(5,\"(1 2 3 4 5)\",\"(2 3 5 4)\")",
      "prod(C(2),semi(C(7),C(3),explicit[2]))",
  };
  return corpus;
}

}  // namespace grpverify::claims

namespace grpverify {

std::vector<ClaimRecord> builtin_claims() {
  std::vector<ClaimRecord> out;
  claims::add_examples(out);
  claims::add_structure(out);
  claims::add_sweeps(out);
  claims::add_psl(out);
  claims::add_extensions(out);
  claims::add_constants(out);
  return out;
}

}  // namespace grpverify

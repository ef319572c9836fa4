#include "claims_common.hpp"

#include <algorithm>

namespace grpverify::claims {
namespace {

const std::vector<std::uint64_t> kPrimes = {2, 3, 5, 7};
const std::vector<std::uint64_t> kOdd = {3, 5, 7};

const Table kP1 = {{2, rat(1)}, {3, rat(4)}, {5, rat(24)}, {7, rat(60)}};
const Table kP1Polyhedral = {{2, rat(15, 16)}, {3, rat(20, 9)}, {5, rat(24)}, {7, rat(60)}};
const Table kP1Refined = {{2, rat(1)}, {3, rat(20, 9)}, {5, rat(6)}, {7, rat(60)}};
const Table kP1xP1 = {{2, rat(1)}, {3, rat(10)}, {5, rat(72)}, {7, rat(7200)}};
const Table kCB = {{2, rat(2)}, {3, rat(800, 81)}, {5, rat(144)}, {7, rat(7200)}};
const Table kTriangle = {{2, rat(3)}, {3, rat(2)}, {5, rat(6)}, {7, rat(6)}};
const Table kP2Pre = {{3, rat(7)}, {5, rat(168)}, {7, rat(360)}};
const Table kP2 = {{3, rat(800, 81)}, {5, rat(168)}, {7, rat(7200)}};
const Table kDP6 = {{2, rat(3)}, {3, rat(4)}, {5, rat(12)}, {7, rat(12)}};
const Table kAux = {{2, rat(3)}, {3, rat(10)}, {5, rat(144)}, {7, rat(720)}};
const Table kJdP = {{2, rat(3)}, {3, rat(10)}, {5, rat(144)}, {7, rat(7200)}};
const Table kJdPOdd = {{3, rat(10)}, {5, rat(168)}, {7, rat(7200)}};
const Table kCr2 = {{3, rat(10)}, {5, rat(168)}, {7, rat(7200)}};
const Table kAnSn = {{2, rat(2)}, {3, rat(40, 9)}, {5, rat(48)}, {7, rat(120)}};

std::string key(const std::string& base, std::uint64_t v) { return base + "." + std::to_string(v); }

// Exact entry when present, otherwise the table value.
Rational lookup(const Table& t, std::uint64_t p) {
  auto it = t.find(p);
  return it != t.end() ? it->second : at(t, p);
}

Rational max_of(std::initializer_list<Rational> v) { return *std::max_element(v.begin(), v.end()); }

// Largest d / |d_(p)|^3 over the given quotient orders; a prime p >= 7 is
// represented by 7, which divides none of them.
Rational quotient_bound(const std::vector<std::uint64_t>& orders, std::uint64_t p) {
  Rational best = 0;
  for (auto d : orders) best = std::max(best, ratio(d, d, p));
  return best;
}

ClaimRecord base(std::string id, std::string label, std::string quote, CheckKind kind,
                 const std::vector<std::uint64_t>& primes, const Table* table) {
  ClaimRecord c;
  c.id = std::move(id);
  c.paper_ref = label + ": \"" + quote + "\"";
  c.kind = kind;
  c.primes = primes;
  if (table)
    for (auto p : primes) c.constants.emplace_back(key("J", p), at(*table, p));
  return c;
}

// Records the case maximum per prime and whether it stays within the table.
ClaimRecord chain_claim(std::string id, std::string label, std::string quote, const std::vector<std::uint64_t>& primes,
                        const Table& table, const Table& case_max,
                        std::function<Rational(std::uint64_t)> chain) {
  ClaimRecord c = base(std::move(id), std::move(label), std::move(quote), CheckKind::Arithmetic, primes, &table);
  for (auto p : primes) {
    c.expected.push_back(ex(key("case_max", p), lookup(case_max, p)));
    c.expected.push_back(ex_bool(key("within_table", p), true));
  }
  c.check = [primes, table, chain](ClaimContext& ctx) {
    for (auto p : primes) {
      const Rational v = chain(p);
      ctx.record(key("case_max", p), v);
      ctx.record_bool(key("within_table", p), v <= at(table, p));
    }
  };
  return c;
}

std::vector<std::string> p1_family(std::uint64_t p) {
  std::vector<std::string> out;
  if (p != 2) out.push_back("EA(2,2)");
  for (std::uint64_t n = 3; n <= 12; ++n)
    if (coprime(n, p)) out.push_back("D(" + std::to_string(n) + ")");
  for (const char* g : {"A(4)", "S(4)", "A(5)"}) out.emplace_back(g);
  const std::map<std::uint64_t, std::vector<std::uint64_t>> qs = {
      {2, {2, 4, 8}}, {3, {3, 9}}, {5, {5}}, {7, {7}}, {11, {11}}, {13, {13}}};
  for (auto q : qs.at(p)) {
    out.push_back("PSL(2," + std::to_string(q) + ")");
    if (q % 2) out.push_back("PGL(2," + std::to_string(q) + ")");
  }
  const std::map<std::uint64_t, std::vector<std::string>> type5 = {
      {2, {"C(2)", "semi(EA(2,2),C(3),explicit[0 1 1 1])", "semi(EA(2,3),C(7),explicit[0 0 1 1 0 1 0 1 0])"}},
      {3, {"C(3)", "semi(C(3),C(2),inv)", "semi(EA(3,2),C(8),explicit[1 2 1 1])"}},
      {5, {"C(5)", "semi(C(5),C(4),explicit[2])", "semi(C(5),C(2),inv)"}},
      {7, {"C(7)", "semi(C(7),C(3),explicit[2])", "semi(C(7),C(6),explicit[3])"}},
      {11, {"C(11)", "semi(C(11),C(5),explicit[3])"}},
      {13, {"C(13)", "semi(C(13),C(4),explicit[5])"}}};
  for (const auto& g : type5.at(p)) out.push_back(g);
  return out;
}

void add_p1(std::vector<ClaimRecord>& out) {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13};
  ClaimRecord c = base("LEM-7.2", "lemma:P1", "Moreover, one can take $J_5(\\mathbb P^1)=2$ unless",
                       CheckKind::Characteristic, primes, &kP1);
  const std::map<std::uint64_t, Rational> worst = {{2, rat(63, 64)}, {3, rat(4)},   {5, rat(24)},
                                                   {7, rat(60)},     {11, rat(60)}, {13, rat(60)}};
  for (auto p : primes) {
    c.expected.push_back(ex(key("max_ratio", p), worst.at(p)));
    c.expected.push_back(ex_bool(key("within_table", p), true));
  }
  c.expected.push_back(ex("refined_max.3", rat(20, 9)));
  c.expected.push_back(ex("refined_max.5", rat(2)));
  c.expected.push_back(ex("V4_index_max.5", std::uint64_t{6}));
  c.expected.push_back(ex("uncertified", std::uint64_t{0}));
  c.check = [primes](ClaimContext& ctx) {
    const std::size_t cap = ctx.caps().max_aut_order;
    std::uint64_t uncertified = 0;
    std::uint64_t v4 = 0;
    Rational refined3 = 0, refined5 = 0;
    std::string w3, w5;
    auto isomorphic_to_any = [&](const MaterializedGroup& m, std::initializer_list<const char*> names) {
      for (const char* n : names)
        if (m.order() == ctx.group(n).order() && is_isomorphic(m, ctx.group(n))) return true;
      return false;
    };
    for (auto p : primes) {
      Rational best = 0;
      std::string witness;
      for (const auto& g : p1_family(p)) {
        const MaterializedGroup& m = ctx.group(g);
        const auto* autos = m.order() <= cap ? &ctx.aut(g).automorphisms : nullptr;
        const CharSearch r = min_preserved(m, p, ctx.normals(g), true, autos, cap);
        uncertified += r.uncertified;
        const Rational q = ratio(r.index, m.order(), p);
        if (q > best) {
          best = q;
          witness = g + " index " + std::to_string(r.index);
        }
        if (p == 5) {
          if (isomorphic_to_any(m, {"S(4)", "A(4)", "EA(2,2)"})) {
            v4 = std::max<std::uint64_t>(v4, min_preserved(m, p, ctx.normals(g), false, autos, cap).index);
          } else if (q > refined5) {
            refined5 = q;
            w5 = g;
          }
        }
        if (p == 3 && !isomorphic_to_any(m, {"EA(2,2)"}) && q > refined3) {
          refined3 = q;
          w3 = g;
        }
      }
      ctx.record(key("max_ratio", p), best, witness);
      ctx.record_bool(key("within_table", p), best <= at(kP1, p));
    }
    ctx.record("refined_max.3", refined3, w3);
    ctx.record("refined_max.5", refined5, w5);
    ctx.record("V4_index_max.5", v4);
    ctx.record("uncertified", uncertified);
  };
  out.push_back(std::move(c));
}

// Largest case value in the proof for subgroups of the square of PGL_2.
Rational p1xp1_chain(std::uint64_t p) {
  const Rational product = at(kP1Refined, p) * at(kP1Refined, p);
  const Rational a5 = ratio(7200, 7200, p);
  if (p == 2) return max_of({product, a5, rat(1)});
  const Rational a4s4 = p == 3 ? rat(72, 27) : rat(72);
  return max_of({product, rat(8), a4s4, a5, rat(4), rat(2)});
}

void add_p1xp1(std::vector<ClaimRecord>& out) {
  struct Inst {
    std::string expr;
    std::uint64_t p;
    Rational ratio;
  };
  const std::vector<Inst> inst = {
      {"swapsq(A(5))", 2, rat(225, 1024)}, {"swapsq(A(5))", 3, rat(800, 81)},
      {"swapsq(A(5))", 5, rat(288, 625)},  {"swapsq(A(5))", 7, rat(7200)},
      {"swapsq(S(4))", 2, rat(9, 16384)},  {"swapsq(S(4))", 3, rat(8, 81)},
      {"swapsq(S(4))", 5, rat(72)},        {"swapsq(S(4))", 7, rat(72)},
      {"swapsq(D(5))", 3, rat(8)},         {"swapsq(PGL(2,5))", 5, rat(1152, 625)},
      {"prod(A(5),A(5))", 7, rat(3600)},   {"prod(S(4),D(5))", 3, rat(4, 9)},
  };
  ClaimRecord c = base("COR-7.3", "corollary:P1xP1", "Then every finite subgroup $G$ of $\\hat{\\Gamma}$ contains",
                       CheckKind::JSweep, kPrimes, &kP1xP1);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    c.groups.push_back(inst[i].expr);
    c.expected.push_back(ex(key(inst[i].expr + ".j", inst[i].p), inst[i].ratio));
  }
  const Table case_max = {{2, rat(1)}, {3, rat(800, 81)}, {5, rat(72)}, {7, rat(7200)}};
  for (auto p : kPrimes) {
    c.expected.push_back(ex(key("case_max", p), at(case_max, p)));
    c.expected.push_back(ex_bool(key("within_table", p), true));
  }
  c.expected.push_back(ex_bool("instances_within_table", true));
  c.check = [inst](ClaimContext& ctx) {
    bool within = true;
    for (const auto& i : inst) {
      const JAnalysis a = j_analysis(ctx.group(i.expr), i.p, ctx.normals(i.expr));
      ctx.record(key(i.expr + ".j", i.p), a.j_ratio, "min index " + std::to_string(a.min_index));
      within = within && a.j_ratio <= at(kP1xP1, i.p);
    }
    ctx.record_bool("instances_within_table", within);
    for (auto p : kPrimes) {
      const Rational v = p1xp1_chain(p);
      ctx.record(key("case_max", p), v);
      ctx.record_bool(key("within_table", p), v <= at(kP1xP1, p));
    }
  };
  out.push_back(std::move(c));
}

// Largest |PGL_3(F_q)| / q^9 and |PU_3(F_q)| bound / q^9 for q = p^k, k <= 6.
std::pair<Rational, Rational> linear_unitary(std::uint64_t p) {
  Rational lin = 0, uni = 0;
  for (unsigned k = 1; k <= 6; ++k) {
    const BigInt q = ipow(BigInt(p), k);
    const BigInt q9 = q * q * q * q * q * q * q * q * q;
    lin = std::max(lin, Rational(q * q * q * (q * q * q - 1) * (q * q - 1)) / Rational(q9));
    uni = std::max(uni, Rational(q * q * q * (q * q * q + 1) * (q * q - 1) * (q + 1)) / Rational(q9));
  }
  return {lin, uni};
}

Rational p2_preliminary_chain(std::uint64_t p) {
  const auto [lin, uni] = linear_unitary(p);
  Rational best = max_of({at(kTriangle, p), at(kP1, p), lin, uni, ratio(168, 168, p)});
  if (p != 3) best = std::max(best, rat(24));
  if (p == 5) best = max_of({best, ratio(720, 720, 5), ratio(2520, 2520, 5)});
  return best;
}

Rational cb_chain(std::uint64_t p) {
  if (p == 2) return rat(2);
  const Rational j = p == 5 ? rat(2) : p == 3 ? rat(20, 9) : at(kP1, p);
  Rational best = max_of({rat(3) * j, rat(4) * j, at(kAnSn, p) * j, rat(2) * j});
  if (p == 5) best = std::max(best, rat(24) * rat(6));
  if (p == 3) best = std::max(best, rat(4) * rat(20, 9));
  return best;
}

void add_surfaces(std::vector<ClaimRecord>& out) {
  out.push_back(chain_claim("LEM-8.2", "lemma:triangle", "Suppose that $G$ preserves a triangle.", kPrimes, kTriangle,
                            kTriangle, [](std::uint64_t p) { return quotient_bound({1, 2, 3, 6}, p); }));
  {
    const Table case_max = {{3, rat(56, 9)}, {5, rat(168)}, {7, rat(60)}, {11, rat(168)}};
    ClaimRecord c = chain_claim("LEM-8.3", "lemma:P2-preliminary",
                                "Suppose that $G$ preserves neither a point nor a line", {3, 5, 7, 11}, kP2Pre,
                                case_max, p2_preliminary_chain);
    c.kind = CheckKind::JSweep;
    c.groups = {"HESS", "PSL(2,7)", "PSL(3,2)"};
    c.expected.push_back(ex("unitary_max.3", rat(896, 729)));
    c.expected.push_back(ex_bool("linear_below_one", true));
    c.expected.push_back(ex("HESS.min_index.5", std::uint64_t{24}));
    c.expected.push_back(ex_bool("HESS.normal_is_EA32", true));
    c.expected.push_back(ex_bool("PSL(2,7)~PSL(3,2)", true));
    c.expected.push_back(ex("PSL(2,7).j.3", rat(56, 9)));
    auto chain = c.check;
    c.check = [chain](ClaimContext& ctx) {
      chain(ctx);
      ctx.record("unitary_max.3", linear_unitary(3).second);
      bool below = true;
      for (std::uint64_t p : {3, 5, 7}) below = below && linear_unitary(p).first < 1;
      ctx.record_bool("linear_below_one", below);
      const MaterializedGroup& h = ctx.group("HESS");
      const JAnalysis a = j_analysis(h, 5, ctx.normals("HESS"));
      ctx.record("HESS.min_index.5", a.min_index, describe(h, a.witness));
      ctx.record_bool("HESS.normal_is_EA32", is_isomorphic(h.subgroup(a.witness), ctx.group("EA(3,2)")));
      ctx.record_bool("PSL(2,7)~PSL(3,2)", is_isomorphic(ctx.group("PSL(2,7)"), ctx.group("PSL(3,2)")));
      ctx.record("PSL(2,7).j.3", j_analysis(ctx.group("PSL(2,7)"), 3, ctx.normals("PSL(2,7)")).j_ratio);
    };
    out.push_back(std::move(c));
  }
  out.push_back(chain_claim("PROP-9.2", "proposition:CB", "be a $G$-equivariant conic bundle.", kPrimes, kCB, kCB,
                            cb_chain));
  out.push_back(chain_claim("COR-9.4", "corollary:P2", "\\frac{800}{81}, &\\text{if\\ } p=3.\\\\", kOdd, kP2, kP2,
                            [](std::uint64_t p) { return std::max(at(kP2Pre, p), at(kCB, p)); }));
  out.push_back(chain_claim("CONST-P1", "lemma:P1", "contains a characteristic cyclic subgroup", kPrimes, kP1, kP1,
                            [](std::uint64_t p) {
                              const Rational dihedral = p == 2 ? rat(1) : rat(4);
                              return max_of({dihedral, at(kP1Polyhedral, p), rat(1)});
                            }));
  out.push_back(chain_claim("CONST-dP6", "lemma:dP6",
                            "Let $S$ be a del Pezzo surface of degree $6$ over an algebraically closed field", kPrimes,
                            kDP6, kDP6, [](std::uint64_t p) { return quotient_bound({1, 2, 3, 4, 6, 12}, p); }));
  out.push_back(chain_claim(
      "CONST-JdP", "proposition:dP",
      "Let $S$ be a del Pezzo surface of degree $d\\not\\in\\{1, 2, 9\\}$ over a field", kPrimes, kJdP, kJdP,
      [](std::uint64_t p) { return max_of({at(kP1xP1, p), at(kCB, p), at(kDP6, p), at(kAux, p)}); }));
  out.push_back(chain_claim("CONST-JdP-odd", "proposition:dP-odd", "Let $S$ be a del Pezzo surface over a field", kOdd,
                            kJdPOdd, kJdPOdd, [](std::uint64_t p) {
                              return max_of({at(kJdP, p), at(kP2, p), rat(2) * at(kP1, p)});
                            }));
  out.push_back(chain_claim("THM-1.9", "theorem:main", "of~\\mbox{$\\Cr_2(\\Bbbk)$}", kOdd, kCr2, kCr2,
                            [](std::uint64_t p) { return std::max(at(kJdPOdd, p), at(kCB, p)); }));
  {
    ClaimRecord c = base("COR-10.8", "corollary:dP3", "|G|=25920=2^6\\cdot 3^4\\cdot 5< 2^{18}=|G_{(2)}|^3.",
                         CheckKind::Arithmetic, {2}, nullptr);
    c.expected = {ex("order", std::uint64_t{25920}), ex("p_part.2", std::uint64_t{64}),
                  ex("ratio.2", rat(405, 4096)), ex_bool("below_cube", true)};
    c.check = [](ClaimContext& ctx) {
      // |PSU_4(F_2)| = q^6 (q^2-1)(q^3+1)(q^4-1) / gcd(4, q+1) at q = 2.
      const std::uint64_t order = 64 * 3 * 9 * 15;
      ctx.record("order", order);
      ctx.record("p_part.2", p_part(order, 2));
      ctx.record("ratio.2", ratio(order, order, 2));
      ctx.record_bool("below_cube", order < p_cube(order, 2));
    };
    out.push_back(std::move(c));
  }
}

}  // namespace

void add_constants(std::vector<ClaimRecord>& out) {
  add_p1(out);
  add_p1xp1(out);
  add_surfaces(out);
}

}  // namespace grpverify::claims

#include "claims_common.hpp"

#include <algorithm>

namespace grpverify::claims {
namespace {

std::string key(const std::string& base, std::uint64_t v) { return base + "." + std::to_string(v); }

std::size_t map_order(const std::vector<Index>& sigma) {
  std::vector<Index> power = sigma;
  std::size_t k = 1;
  for (;;) {
    bool id = true;
    for (std::size_t i = 0; i < power.size() && id; ++i) id = power[i] == i;
    if (id) return k;
    power = compose_maps(sigma, power);
    ++k;
  }
}

ElementSet cyclic_span(const MaterializedGroup& m, Index g) {
  ElementSet s(m.order());
  Index x = 0;
  do {
    s.set(x);
    x = m.mul(x, g);
  } while (x != 0);
  return s;
}

bool commutes_with(const MaterializedGroup& m, Index a, const ElementSet& s) {
  for (Index x : s.indices())
    if (m.mul(a, x) != m.mul(x, a)) return false;
  return true;
}

// H = F ⋊ C(r), with the generator of C(r) acting on F by sigma.
struct Extension {
  std::string label;
  GroupHandle handle;
  const MaterializedGroup* h = nullptr;
  const MaterializedGroup* f = nullptr;
  ElementSet fset;
  std::vector<Index> embed;  // F index -> H index
  std::vector<std::vector<Index>> aut_hf;
};

Extension extend(ClaimContext& ctx, const std::string& fexpr, std::uint64_t r, const std::vector<Index>& sigma,
                 std::size_t sigma_order, bool inner) {
  const GroupHandle& fh = ctx.handle(fexpr);
  const GroupHandle& ch = ctx.handle("C(" + std::to_string(r) + ")");
  const std::string label = fexpr + " by C(" + std::to_string(r) + ") acting with " + (inner ? "inner" : "outer") +
                            " order " + std::to_string(sigma_order);
  Extension e{label, semidirect_by_automorphisms(label, fh, ch, {sigma}), nullptr, nullptr, {}, {}, {}};
  e.h = &e.handle.materialized(ctx.caps().max_order);
  e.f = &ctx.group(fexpr);
  e.fset = e.handle.generated(e.handle.normal_generators);
  const std::size_t n = e.f->order();
  for (Index x = 0; x < n; ++x) {
    std::vector<Permutation::Point> im(e.h->degree());
    for (std::size_t y = 0; y < im.size(); ++y)
      im[y] = static_cast<Permutation::Point>(y < n ? e.f->mul(x, static_cast<Index>(y)) : y);
    e.embed.push_back(*e.h->find(Permutation(std::move(im))));
  }
  e.aut_hf = automorphisms_preserving(automorphism_group(*e.h, ctx.caps().max_aut_order, ctx.jobs()), e.fset);
  return e;
}

// One automorphism of F per (order dividing r, inner or outer) combination.
std::vector<Extension> extensions(ClaimContext& ctx, const std::string& fexpr, std::uint64_t r) {
  const MaterializedGroup& f = ctx.group(fexpr);
  std::set<std::pair<std::size_t, bool>> seen;
  std::vector<Extension> out;
  for (const auto& sigma : ctx.aut(fexpr).automorphisms) {
    const std::size_t d = map_order(sigma);
    if (r % d != 0) continue;
    const bool inner = is_inner(f, sigma);
    if (!seen.insert({d, inner}).second) continue;
    out.push_back(extend(ctx, fexpr, r, sigma, d, inner));
  }
  return out;
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t hypotheses = 0;
  std::uint64_t violations = 0;
  Rational worst = 0;
  std::string witness;

  void add(const Extension& e, std::uint64_t p, std::size_t index, const Rational& bound) {
    ++checked;
    const Rational q = Rational(BigInt(index)) / bound;
    if (q > worst) {
      worst = q;
      witness = e.label + " p=" + std::to_string(p) + " index " + std::to_string(index);
    }
    if (Rational(BigInt(index)) > bound) ++violations;
  }

  void record(ClaimContext& ctx, bool with_hypotheses) const {
    ctx.record("checked", checked, witness);
    if (with_hypotheses) ctx.record("hypotheses_hold", hypotheses);
    ctx.record("violations", violations, witness);
  }
};

void expect_tally(ClaimRecord& c, std::uint64_t checked, std::optional<std::uint64_t> hyp) {
  c.expected.push_back(ex("checked", checked));
  if (hyp) c.expected.push_back(ex("hypotheses_hold", *hyp));
  c.expected.push_back(ex("violations", std::uint64_t{0}));
}

std::size_t search(const Extension& e, std::uint64_t p, bool cyclic_only, ClaimContext& ctx) {
  return min_preserved(*e.h, p, normal_subgroups(*e.h), cyclic_only, &e.aut_hf, ctx.caps().max_aut_order).index;
}

// For every lambda in s (restricted to orders coprime to p when p > 0) and
// alpha in H normalizing <lambda>, alpha^2 commutes with lambda.
bool square_hypothesis(const Extension& e, const std::vector<Index>& lambdas) {
  const MaterializedGroup& h = *e.h;
  for (Index l : lambdas) {
    const ElementSet span = cyclic_span(h, l);
    for (Index a = 0; a < h.order(); ++a) {
      if (!span.test(h.conj(l, a))) continue;
      const Index a2 = h.mul(a, a);
      if (h.mul(a2, l) != h.mul(l, a2)) return false;
    }
  }
  return true;
}

ClaimRecord base(std::string id, std::string label, std::string quote, CheckKind kind) {
  ClaimRecord c;
  c.id = std::move(id);
  c.paper_ref = label + ": \"" + quote + "\"";
  c.kind = kind;
  return c;
}

struct Darafsheh {
  std::uint64_t p, m, n;
  std::string expr;
};

const std::vector<Darafsheh>& darafsheh_instances() {
  static const std::vector<Darafsheh> v = {
      {3, 1, 4, "semi(C(3),C(4),inv)"},
      {3, 2, 8, "semi(EA(3,2),C(8),explicit[1 2 1 1])"},
      {5, 1, 4, "semi(C(5),C(4),explicit[2])"},
      {2, 3, 7, "semi(EA(2,3),C(7),explicit[0 0 1 1 0 1 0 1 0])"},
  };
  return v;
}

struct ProductCase {
  std::string expr;
  std::uint64_t p;
};

const std::vector<ProductCase>& product_cases() {
  static const std::vector<ProductCase> v = {
      {"semi(C(3),C(2),inv)", 3}, {"semi(C(3),C(4),inv)", 3}, {"D(5)", 5}, {"A(4)", 2}};
  return v;
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void add_semidirect(std::vector<ClaimRecord>& out) {
  {
    ClaimRecord c = base("LEM-5.1", "lemma:Darafsheh",
                         "Then for some positive integer~\\mbox{$t\\leqslant p^m-1$}, the element $g^t$ commutes "
                         "with~$R'$.",
                         CheckKind::Characteristic);
    const std::vector<std::uint64_t> max_t = {2, 8, 4, 7};
    for (std::size_t i = 0; i < darafsheh_instances().size(); ++i) {
      const auto& d = darafsheh_instances()[i];
      c.groups.push_back(d.expr);
      c.expected.push_back(ex(key("max_t", i), max_t[i]));
      c.expected.push_back(ex(key("within", i), std::uint64_t{1}));
    }
    c.check = [](ClaimContext& ctx) {
      for (std::size_t i = 0; i < darafsheh_instances().size(); ++i) {
        const auto& d = darafsheh_instances()[i];
        const GroupHandle& gh = ctx.handle(d.expr);
        const MaterializedGroup& m = ctx.group(d.expr);
        const ElementSet rp = gh.generated(gh.normal_generators);
        std::uint64_t worst = 0;
        for (Index g = 0; g < m.order(); ++g) {
          std::uint64_t t = 1;
          for (Index x = g; !commutes_with(m, x, rp); x = m.mul(x, g)) ++t;
          worst = std::max(worst, t);
        }
        ctx.record(key("max_t", i), worst, d.expr);
        ctx.record(key("within", i), std::uint64_t(worst <= upow(d.p, unsigned(d.m)) - 1 ? 1 : 0));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c = base("COR-5.2", "corollary:Darafsheh", "the index of $L'$ in $L$ does not exceed~$p^m$,",
                         CheckKind::Characteristic);
    const std::vector<std::uint64_t> in_l = {2, 8, 4, 7}, in_r = {6, 72, 20, 56};
    for (std::size_t i = 0; i < darafsheh_instances().size(); ++i) {
      c.groups.push_back(darafsheh_instances()[i].expr);
      c.expected.push_back(ex(key("index_in_L", i), in_l[i]));
      c.expected.push_back(ex(key("index_in_R", i), in_r[i]));
      for (const char* k : {"C_characteristic", "C_is_product", "C_self_centralizing", "L'_characteristic"})
        c.expected.push_back(ex_bool(key(k, i), true));
    }
    c.check = [](ClaimContext& ctx) {
      for (std::size_t i = 0; i < darafsheh_instances().size(); ++i) {
        const auto& d = darafsheh_instances()[i];
        const MaterializedGroup& m = ctx.group(d.expr);
        const AutGroup& aut = ctx.aut(d.expr);
        const ElementSet rp = sylow_subgroup(m, d.p);
        const ElementSet cc = centralizer(m, rp);
        const auto lp = coprime_part(m, cc, d.p);
        const std::uint64_t pm = upow(d.p, unsigned(d.m));
        ctx.record_bool(key("C_characteristic", i), is_characteristic(aut, cc), describe(m, cc));
        ctx.record_bool(key("C_is_product", i), lp && lp->count() * pm == cc.count());
        ctx.record_bool(key("C_self_centralizing", i), centralizer(m, cc) == cc);
        ctx.record_bool(key("L'_characteristic", i), lp && is_characteristic(aut, *lp));
        const std::uint64_t l = lp ? lp->count() : 1;
        ctx.record(key("index_in_L", i), std::uint64_t(m.order() / pm / l));
        ctx.record(key("index_in_R", i), std::uint64_t(m.order() / l));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c = base("LEM-5.3", "lemma:Darafsheh-product", "and index at most~\\mbox{$|H_{(p)}|^{3}$}.",
                         CheckKind::Characteristic);
    for (const auto& pc : product_cases()) c.groups.push_back("prod(" + pc.expr + "," + pc.expr + ")");
    expect_tally(c, 155, std::nullopt);
    c.check = [](ClaimContext& ctx) {
      Tally t;
      for (const auto& pc : product_cases()) {
        const std::string g = "prod(" + pc.expr + "," + pc.expr + ")";
        const MaterializedGroup& m = ctx.group(g);
        for (const auto& cl : ctx.classes(g)) {
          const MaterializedGroup s = m.subgroup(cl.representative);
          const CharSearch r = min_preserved(s, pc.p, normal_subgroups(s), false, nullptr, ctx.caps().max_aut_order);
          ++t.checked;
          const std::uint64_t bound = p_cube(s.order(), pc.p);
          if (r.index > bound || r.uncertified) {
            ++t.violations;
            t.witness += g + " " + describe(m, cl.representative) + "; ";
          }
        }
      }
      ctx.record("checked", t.checked);
      ctx.record("violations", t.violations, t.witness);
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c = base("COR-5.4", "corollary:Darafsheh-product",
                         "and index at most~\\mbox{$J\\cdot |G_{(p)}|^{3}$},", CheckKind::JSweep);
    for (const auto& pc : product_cases()) c.groups.push_back("swapsq(" + pc.expr + ")");
    c.constants = {{"J.2", rat(1)}, {"J.3", rat(2)}};
    expect_tally(c, 76, std::nullopt);
    c.check = [](ClaimContext& ctx) {
      Tally t;
      for (const auto& pc : product_cases()) {
        const std::string g = "swapsq(" + pc.expr + ")";
        const GroupHandle& gh = ctx.handle(g);
        const MaterializedGroup& m = ctx.group(g);
        const ElementSet base_set = gh.generated(gh.normal_generators);
        const Rational j = pc.p == 2 ? rat(1) : rat(2);
        for (const auto& cl : ctx.classes(g)) {
          if (cl.representative.subset_of(base_set)) continue;
          const JAnalysis a = j_analysis(m.subgroup(cl.representative), pc.p);
          ++t.checked;
          if (a.j_ratio > j) {
            ++t.violations;
            t.witness += g + " " + describe(m, cl.representative) + "; ";
          }
        }
      }
      ctx.record("checked", t.checked);
      ctx.record("violations", t.violations, t.witness);
    };
    out.push_back(std::move(c));
  }
}

struct ExtCase {
  std::string f;
  std::vector<std::uint64_t> rs;
  std::vector<std::uint64_t> primes;
};

// Applies fn to every extension of every case and every admissible prime.
template <class Fn>
void for_each_extension(ClaimContext& ctx, const std::vector<ExtCase>& cases, Fn fn) {
  for (const auto& cs : cases)
    for (auto r : cs.rs) {
      const std::vector<Extension> exts = extensions(ctx, cs.f, r);
      for (const auto& e : exts)
        for (auto p : cs.primes)
          if (coprime(r, p)) fn(e, p);
    }
}

std::vector<std::string> case_groups(const std::vector<ExtCase>& cases) {
  std::vector<std::string> g;
  for (const auto& c : cases) g.push_back(c.f);
  return g;
}

const Table kAnSn = {{2, rat(2)}, {3, rat(40, 9)}, {5, rat(48)}, {7, rat(120)}};

void add_extension_lemmas(std::vector<ClaimRecord>& out) {
  {
    const std::vector<ExtCase> cases = {{"EA(2,2)", {2, 3, 4, 6}, {3, 5, 7}}};
    ClaimRecord c = base("EXT-6.1", "lemma:small-dihedral-group-extension",
                         "and index at most~$3$ preserved by~\\mbox{$\\Aut(H;F)$}.", CheckKind::Characteristic);
    c.groups = case_groups(cases);
    expect_tally(c, 22, std::nullopt);
    c.check = [cases](ClaimContext& ctx) {
      Tally t;
      for_each_extension(ctx, cases, [&](const Extension& e, std::uint64_t p) {
        t.add(e, p, search(e, p, false, ctx), rat(3));
      });
      t.record(ctx, false);
    };
    out.push_back(std::move(c));
  }
  {
    const std::vector<ExtCase> cases = {
        {"D(3)", {2, 4}, {5, 7}}, {"D(4)", {2, 3}, {3, 5, 7}}, {"D(5)", {2, 3, 4}, {3, 7}}, {"D(6)", {2}, {5, 7}}};
    ClaimRecord c = base("EXT-6.2", "lemma:dihedral-group-extension", "and index at most~$4$",
                         CheckKind::Characteristic);
    c.groups = case_groups(cases);
    expect_tally(c, 34, 34);
    c.check = [cases](ClaimContext& ctx) {
      Tally t;
      for_each_extension(ctx, cases, [&](const Extension& e, std::uint64_t p) {
        const MaterializedGroup& h = *e.h;
        const std::size_t n = e.f->order() / 2;
        ElementSet rot(h.order());
        for (Index x : e.fset.indices())
          if (h.element_order(x) == n) rot = cyclic_span(h, x);
        bool hyp = true;
        for (Index a = 0; a < h.order() && hyp; ++a) hyp = commutes_with(h, h.mul(a, a), rot);
        if (!hyp) return;
        ++t.hypotheses;
        t.add(e, p, search(e, p, false, ctx), rat(4));
      });
      t.record(ctx, true);
    };
    out.push_back(std::move(c));
  }
  {
    const std::vector<ExtCase> cases = {
        {"S(3)", {2, 3, 4}, {2, 3, 5}}, {"A(4)", {2, 3}, {2, 3, 5}}, {"A(5)", {2, 3}, {2, 3, 5}}};
    ClaimRecord c = base("EXT-6.3", "lemma:extension-auxiliary", "the cyclic group $A$ generated by $\\gamma$ is",
                         CheckKind::Characteristic);
    c.groups = case_groups(cases);
    c.expected = {ex("checked", std::uint64_t{2064}), ex("violations", std::uint64_t{0})};
    c.check = [cases](ClaimContext& ctx) {
      std::uint64_t checked = 0, bad = 0;
      std::string witness;
      for (const auto& cs : cases)
        for (auto r : cs.rs)
          for (const auto& e : extensions(ctx, cs.f, r))
            for (auto p : cs.primes) {
              const MaterializedGroup& h = *e.h;
              const ElementSet cf = centralizer(h, e.fset);
              const auto fe = e.fset.indices();
              const auto fg = subgroup_generators(h, e.fset);
              for (Index a = 0; a < h.order(); ++a) {
                if (!coprime(h.element_order(a), p) || e.fset.test(a)) continue;
                const ElementSet b = extend_closure(h, e.fset, fe, fg, a);
                for (Index g : (b & cf).indices()) {
                  ++checked;
                  if (!coprime(h.element_order(g), p) || !preserved_by_all(e.aut_hf, cyclic_span(h, g))) {
                    ++bad;
                    witness += e.label + " p=" + std::to_string(p) + "; ";
                  }
                }
              }
            }
      ctx.record("checked", checked);
      ctx.record("violations", bad, witness);
    };
    out.push_back(std::move(c));
  }
  {
    const std::vector<ExtCase> cases = {{"S(3)", {2, 3, 4}, {2, 3, 5, 7}},
                                        {"A(4)", {2, 3}, {2, 3, 5}},
                                        {"S(4)", {2, 3}, {2, 3, 5}},
                                        {"A(5)", {2, 3}, {2, 3, 5, 7}}};
    ClaimRecord c = base("EXT-6.4", "lemma:An-Sn-extension",
                         "Then $H$ contains a cyclic subgroup of order coprime to $p$ and index at "
                         "most~\\mbox{$d\\cdot |F|$}",
                         CheckKind::Characteristic);
    c.groups = case_groups(cases);
    expect_tally(c, 51, std::nullopt);
    c.check = [cases](ClaimContext& ctx) {
      Tally t;
      std::map<std::string, std::size_t> d;
      for (const auto& cs : cases) d[cs.f] = max_outer_order(ctx.group(cs.f), ctx.aut(cs.f));
      for_each_extension(ctx, cases, [&](const Extension& e, std::uint64_t p) {
        const std::string& f = e.label.substr(0, e.label.find(' '));
        t.add(e, p, search(e, p, true, ctx), rat(static_cast<long long>(d[f] * e.f->order())));
      });
      t.record(ctx, false);
    };
    out.push_back(std::move(c));
  }
  {
    const std::vector<ExtCase> cases = {
        {"A(4)", {2, 3, 5}, {2, 3, 5, 7}}, {"S(4)", {2, 3}, {2, 3, 5, 7}}, {"A(5)", {2, 3}, {2, 3, 5, 7}}};
    ClaimRecord c = base("COR-6.5", "corollary:An-Sn-extension",
                         "Then $H$ contains a cyclic subgroup of order coprime to $p$ and index at "
                         "most~\\mbox{$J\\cdot |F_{(p)}|^3$}",
                         CheckKind::Characteristic);
    c.groups = case_groups(cases);
    for (std::uint64_t p : {2, 3, 5, 7}) c.constants.emplace_back(key("J", p), at(kAnSn, p));
    expect_tally(c, 45, std::nullopt);
    c.check = [cases](ClaimContext& ctx) {
      Tally t;
      for_each_extension(ctx, cases, [&](const Extension& e, std::uint64_t p) {
        t.add(e, p, search(e, p, true, ctx), at(kAnSn, p) * Rational(BigInt(p_cube(e.f->order(), p))));
      });
      t.record(ctx, false);
    };
    out.push_back(std::move(c));
  }
  const std::vector<ExtCase> psl_cases = {{"PSL(2,4)", {3}, {2}},
                                          {"PSL(2,5)", {2, 3}, {5}},
                                          {"PGL(2,5)", {2}, {5}},
                                          {"PSL(2,7)", {2, 3}, {7}}};
  auto psl_claim = [&out, psl_cases](std::string id, std::string label, std::string quote, bool cube) {
    ClaimRecord c = base(std::move(id), std::move(label), std::move(quote), CheckKind::Characteristic);
    c.groups = case_groups(psl_cases);
    expect_tally(c, 14, 14);
    if (cube) c.expected.push_back(ex_bool("order_below_cube", true));
    c.check = [psl_cases, cube](ClaimContext& ctx) {
      Tally t;
      bool below = true;
      for_each_extension(ctx, psl_cases, [&](const Extension& e, std::uint64_t p) {
        const std::uint64_t fp3 = p_cube(e.f->order(), p);
        below = below && e.f->order() < fp3;
        std::vector<Index> lambdas;
        for (Index x : e.fset.indices())
          if (coprime(e.h->element_order(x), p)) lambdas.push_back(x);
        if (!square_hypothesis(e, lambdas)) return;
        ++t.hypotheses;
        const std::size_t bound = cube ? 2 * fp3 : 2 * e.f->order();
        t.add(e, p, search(e, p, true, ctx), rat(static_cast<long long>(bound)));
      });
      t.record(ctx, true);
      if (cube) ctx.record_bool("order_below_cube", below);
    };
    out.push_back(std::move(c));
  };
  psl_claim("EXT-6.6", "lemma:PSL-group-extension", "most~$2\\cdot |F|$ which is preserved by $\\Aut(H;F)$.",
            false);
  psl_claim("COR-6.7", "corollary:PSL-group-extension",
            "most~$2\\cdot |F_{(p)}|^3$ which is preserved by $\\Aut(H;F)$.", true);
  {
    const std::vector<ExtCase> cases = {{"semi(C(3),C(2),inv)", {2, 4}, {3}},
                                        {"semi(C(5),C(4),explicit[2])", {2, 3, 4}, {5}},
                                        {"semi(EA(2,2),C(3),explicit[0 1 1 1])", {3}, {2}}};
    ClaimRecord c = base("EXT-6.8", "lemma:Darafsheh-group-extension",
                         "Then~$H$ contains an abelian subgroup of order coprime to $p$ and index at",
                         CheckKind::Characteristic);
    c.groups = case_groups(cases);
    expect_tally(c, 12, 12);
    c.check = [cases](ClaimContext& ctx) {
      Tally t;
      for (const auto& cs : cases) {
        const GroupHandle& fh = ctx.handle(cs.f);
        const ElementSet l = fh.generated(fh.complement_generators);
        for (auto r : cs.rs)
          for (const auto& e : extensions(ctx, cs.f, r))
            for (auto p : cs.primes) {
              if (!coprime(r, p)) continue;
              std::vector<Index> lambdas;
              for (Index x : l.indices()) lambdas.push_back(e.embed[x]);
              if (!square_hypothesis(e, lambdas)) continue;
              ++t.hypotheses;
              t.add(e, p, search(e, p, false, ctx), rat(static_cast<long long>(2 * p_cube(e.f->order(), p))));
            }
      }
      t.record(ctx, true);
    };
    out.push_back(std::move(c));
  }
}

}  // namespace

void add_extensions(std::vector<ClaimRecord>& out) {
  add_semidirect(out);
  add_extension_lemmas(out);
}

}  // namespace grpverify::claims

#include "claims_common.hpp"

namespace grpverify::claims {
namespace {

std::string key(const std::string& base, std::uint64_t v) { return base + "." + std::to_string(v); }

// Records min_index and j for the group at each prime.
void record_j(ClaimContext& ctx, const std::string& expr, const std::vector<std::uint64_t>& primes,
              const std::string& prefix = "j") {
  const auto& m = ctx.group(expr);
  const auto& normals = ctx.normals(expr);
  for (auto p : primes) {
    const JAnalysis a = j_analysis(m, p, normals);
    ctx.record(key(prefix, p), a.j_ratio, expr + " witness " + describe(m, a.witness));
  }
}

std::size_t abelian_normals(const MaterializedGroup& m, const std::vector<ElementSet>& normals) {
  std::size_t n = 0;
  for (const auto& s : normals)
    if (is_abelian(m, s)) ++n;
  return n;
}

std::size_t characteristic_cyclic(const MaterializedGroup& m, const std::vector<ElementSet>& normals,
                                  const AutGroup& aut) {
  std::size_t n = 0;
  for (const auto& s : normals)
    if (is_cyclic(m, s) && preserved_by_all(aut.automorphisms, s)) ++n;
  return n;
}

}  // namespace

void add_examples(std::vector<ClaimRecord>& out) {
  {
    const std::vector<std::uint64_t> qs = {2, 3, 4, 5, 7, 8, 9, 25};
    const std::map<std::uint64_t, std::uint64_t> orders = {{2, 6},   {3, 24},  {4, 60},  {5, 120},
                                                           {7, 336}, {8, 504}, {9, 720}, {25, 15600}};
    ClaimRecord c;
    c.id = "EX-2.6";
    c.paper_ref = "example:PGL: \"|G|=p^k(p^{2k}-1)<p^{3k}=|G_{(p)}|^3\"";
    c.kind = CheckKind::NormalList;
    for (auto q : qs) {
      c.groups.push_back("PGL(2," + std::to_string(q) + ")");
      c.expected.push_back(ex(key("order", q), orders.at(q)));
      c.expected.push_back(ex_bool(key("below_cube", q), true));
    }
    for (std::uint64_t q : {4, 8, 9, 25}) c.expected.push_back(ex(key("normal_abelian", q), std::uint64_t{1}));
    c.check = [qs](ClaimContext& ctx) {
      for (auto q : qs) {
        const std::string expr = "PGL(2," + std::to_string(q) + ")";
        const std::uint64_t n = ctx.handle(expr).order();
        ctx.record(key("order", q), n);
        std::uint64_t p = 0;
        unsigned k = 0;
        prime_power(q, p, k);
        ctx.record_bool(key("below_cube", q), n < p_cube(n, p),
                        std::to_string(n) + " vs " + std::to_string(p_cube(n, p)));
        if (k >= 2)
          ctx.record(key("normal_abelian", q),
                     std::uint64_t(abelian_normals(ctx.group(expr), ctx.normals(expr))));
      }
    };
    out.push_back(std::move(c));
  }
  {
    const std::vector<std::uint64_t> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27};
    ClaimRecord c;
    c.id = "EX-2.7";
    c.paper_ref = "example:PSL: \"|G|=\\frac{|\\SL_2(\\mathbf{F}_{p^k})|}{2}=\\frac{p^k(p^{2k}-1)}{2}\"";
    c.kind = CheckKind::Arithmetic;
    for (auto q : qs) {
      std::uint64_t p = 0;
      unsigned k = 0;
      prime_power(q, p, k);
      const std::uint64_t full = q * (q * q - 1);
      c.groups.push_back("PSL(2," + std::to_string(q) + ")");
      c.expected.push_back(ex(key("order", q), p == 2 ? full : full / 2));
      c.expected.push_back(ex_bool(key("below_cube", q), true));
    }
    c.check = [qs](ClaimContext& ctx) {
      for (auto q : qs) {
        const std::uint64_t n = ctx.handle("PSL(2," + std::to_string(q) + ")").order();
        std::uint64_t p = 0;
        unsigned k = 0;
        prime_power(q, p, k);
        ctx.record(key("order", q), n);
        ctx.record_bool(key("below_cube", q), n < p_cube(n, p));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "EX-2.8";
    c.paper_ref = "example:A5: \"\\frac{60}{|G_{(5)}|^3}=\\frac{12}{25}\"";
    c.kind = CheckKind::JSweep;
    c.groups = {"A(5)"};
    c.primes = {2, 3, 5, 7};
    const Table j = {{2, rat(15, 16)}, {3, rat(20, 9)}, {5, rat(12, 25)}, {7, rat(60)}};
    for (auto p : c.primes) {
      c.constants.emplace_back(key("J", p), at(j, p));
      c.expected.push_back(ex(key("j", p), at(j, p)));
    }
    c.expected.push_back(ex("min_index", std::uint64_t{60}));
    c.check = [](ClaimContext& ctx) {
      record_j(ctx, "A(5)", {2, 3, 5, 7});
      ctx.record("min_index", j_analysis(ctx.group("A(5)"), 7, ctx.normals("A(5)")).min_index);
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "EX-2.9";
    c.paper_ref =
        "example:constant-subgroup-1: \"$H=\\boldsymbol{\\mu}_3$ cannot contain subgroups of index at most\"";
    c.kind = CheckKind::JSweep;
    c.groups = {"A(5)", "C(3)"};
    c.primes = {5};
    c.expected = {ex("j.A5", rat(12, 25)), ex("j.C3", rat(1))};
    c.check = [](ClaimContext& ctx) {
      ctx.record("j.A5", j_analysis(ctx.group("A(5)"), 5, ctx.normals("A(5)")).j_ratio);
      ctx.record("j.C3", j_analysis(ctx.group("C(3)"), 5, ctx.normals("C(3)")).j_ratio);
    };
    out.push_back(std::move(c));
  }
  {
    const std::string g = "prod(C(2),semi(C(7),C(3),explicit[2]))";
    const std::string h = "semi(C(7),C(3),explicit[2])";
    ClaimRecord c;
    c.id = "EX-2.10";
    c.paper_ref = "example:constant-subgroup-2: \"6=\\frac{3}{4}\\cdot |G_{(2)}|^3.\"";
    c.kind = CheckKind::JSweep;
    c.groups = {g, h};
    c.primes = {2};
    c.expected = {ex("min_index.G", std::uint64_t{6}), ex("j.G", rat(3, 4)),
                  ex("witness_order.G", std::uint64_t{7}), ex("j.H", rat(3)),
                  ex_bool("quotient_is_H", true)};
    c.check = [g, h](ClaimContext& ctx) {
      const auto& mg = ctx.group(g);
      const JAnalysis a = j_analysis(mg, 2, ctx.normals(g));
      ctx.record("min_index.G", a.min_index, describe(mg, a.witness));
      ctx.record("j.G", a.j_ratio);
      ctx.record("witness_order.G", std::uint64_t(a.witness.count()));
      ctx.record("j.H", j_analysis(ctx.group(h), 2, ctx.normals(h)).j_ratio);
      const auto z = center(mg);
      ctx.record_bool("quotient_is_H", z.count() == 2 && is_isomorphic(quotient(mg, z), ctx.group(h)));
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "EX-2.12";
    c.paper_ref = "example:S4: \"Observe that $G$ does not contain non-trivial cyclic characteristic subgroups.\"";
    c.kind = CheckKind::Characteristic;
    c.groups = {"S(4)"};
    c.primes = {2, 3, 5};
    c.erratum = "J at p=2 is printed as 3/256; the trivial subgroup has index 24 = (3/64)*2^9";
    const Table j = {{2, rat(3, 64)}, {3, rat(2, 9)}, {5, rat(6)}};
    const Table jp = {{2, rat(3, 64)}, {3, rat(8, 9)}, {5, rat(24)}};
    c.expected = {ex("normal_orders", "{1,4,12,24}"), ex_bool("V4_characteristic", true),
                  ex("characteristic_cyclic", std::uint64_t{1})};
    for (std::uint64_t p : {2, 3, 5}) {
      c.constants.emplace_back(key("J", p), at(j, p));
      c.constants.emplace_back(key("J'", p), at(jp, p));
      c.expected.push_back(ex(key("J", p), at(j, p)));
      c.expected.push_back(ex(key("J'", p), at(jp, p)));
    }
    c.check = [](ClaimContext& ctx) {
      const auto& m = ctx.group("S(4)");
      const auto& normals = ctx.normals("S(4)");
      const auto& aut = ctx.aut("S(4)");
      std::set<std::uint64_t> orders;
      bool v4 = false;
      for (const auto& s : normals) {
        orders.insert(s.count());
        if (s.count() == 4) v4 = is_abelian(m, s) && preserved_by_all(aut.automorphisms, s);
      }
      ctx.record("normal_orders", fmt_set(orders));
      ctx.record_bool("V4_characteristic", v4);
      ctx.record("characteristic_cyclic", std::uint64_t(characteristic_cyclic(m, normals, aut)));
      for (std::uint64_t p : {2, 3, 5}) {
        const JAnalysis a = j_analysis(m, p, normals);
        ctx.record(key("J", p), a.j_ratio, describe(m, a.witness));
        ctx.record(key("J'", p), ratio(m.order(), m.order(), p));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "EX-2.13";
    c.paper_ref =
        "example:A4: \"in the group $G=\\mathfrak{A}_4$ is the trivial subgroup.\"";
    c.kind = CheckKind::Characteristic;
    c.groups = {"A(4)"};
    c.primes = {2, 3, 5};
    const Table jp = {{2, rat(3, 16)}, {3, rat(4, 9)}, {5, rat(12)}};
    c.expected = {ex("characteristic_cyclic", std::uint64_t{1})};
    for (std::uint64_t p : {2, 3, 5}) {
      c.constants.emplace_back(key("J'", p), at(jp, p));
      c.expected.push_back(ex(key("J'", p), at(jp, p)));
    }
    c.check = [](ClaimContext& ctx) {
      const auto& m = ctx.group("A(4)");
      ctx.record("characteristic_cyclic",
                 std::uint64_t(characteristic_cyclic(m, ctx.normals("A(4)"), ctx.aut("A(4)"))));
      for (std::uint64_t p : {2, 3, 5}) {
        const auto s = min_preserved(m, p, ctx.normals("A(4)"), true, &ctx.aut("A(4)").automorphisms,
                                     ctx.caps().max_aut_order);
        ctx.record(key("J'", p), ratio(s.index, m.order(), p), describe(m, s.subgroup));
      }
    };
    out.push_back(std::move(c));
  }

  // Sharpness witnesses.
  {
    const std::string g = "swapsq(A(5))";
    ClaimRecord c;
    c.id = "SHARP-A5A5";
    c.paper_ref = "theorem:main: \"|G|=7200=7200\\cdot |G_{(p)}|^3.\"";
    c.kind = CheckKind::JSweep;
    c.groups = {g};
    c.primes = {7, 11};
    c.constants = {{"J", rat(7200)}};
    c.expected = {ex("min_index.7", std::uint64_t{7200}), ex("j.7", rat(7200)),
                  ex("min_index.11", std::uint64_t{7200}), ex("j.11", rat(7200))};
    c.check = [g](ClaimContext& ctx) {
      for (std::uint64_t p : {7, 11}) {
        const JAnalysis a = j_analysis(ctx.group(g), p, ctx.normals(g));
        ctx.record(key("min_index", p), a.min_index);
        ctx.record(key("j", p), a.j_ratio);
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "SHARP-PSL27";
    c.paper_ref = "theorem:main: \"|G|=168=168\\cdot |G_{(5)}|^3.\"";
    c.kind = CheckKind::JSweep;
    c.groups = {"PSL(2,7)"};
    c.primes = {5};
    c.constants = {{"J", rat(168)}};
    c.expected = {ex("min_index", std::uint64_t{168}), ex("p", std::uint64_t{5})};
    c.check = [](ClaimContext& ctx) {
      const JAnalysis a = j_analysis(ctx.group("PSL(2,7)"), 5, ctx.normals("PSL(2,7)"));
      ctx.record("min_index", a.min_index);
      ctx.record("p", a.p);
    };
    out.push_back(std::move(c));
  }
  {
    const std::string g = "semi(EA(2,4),pgroup(5,\"(1 2 3 4 5)\",\"(2 5)(3 4)\"),evenperm)";
    ClaimRecord c;
    c.id = "SHARP-D10";
    c.paper_ref = "theorem:main: \"|\\bar{G}|=10=10\\cdot |G_{(3)}|^3.\"";
    c.kind = CheckKind::JSweep;
    c.groups = {g};
    c.primes = {3};
    c.constants = {{"J", rat(10)}};
    c.erratum = "the text bounds the order of normal abelian subgroups; the computed quantity is the index";
    c.expected = {ex("order", std::uint64_t{160}), ex("min_index", std::uint64_t{10}),
                  ex("j", rat(10)), ex("witness_order", std::uint64_t{16})};
    c.check = [g](ClaimContext& ctx) {
      const auto& m = ctx.group(g);
      const JAnalysis a = j_analysis(m, 3, ctx.normals(g));
      ctx.record("order", a.order);
      ctx.record("min_index", a.min_index, describe(m, a.witness));
      ctx.record("j", a.j_ratio);
      ctx.record("witness_order", std::uint64_t(a.witness.count()));
    };
    out.push_back(std::move(c));
  }
  {
    const std::string g = "semi(C(7),C(3),explicit[2])";
    ClaimRecord c;
    c.id = "SHARP-CHAR2";
    c.paper_ref = "remark:future: \"less than $3=3\\cdot |G_{(2)}|^3$\"";
    c.kind = CheckKind::JSweep;
    c.groups = {g};
    c.primes = {2};
    c.constants = {{"J", rat(3)}};
    c.expected = {ex("min_index", std::uint64_t{3}), ex("j", rat(3))};
    c.check = [g](ClaimContext& ctx) {
      const JAnalysis a = j_analysis(ctx.group(g), 2, ctx.normals(g));
      ctx.record("min_index", a.min_index, describe(ctx.group(g), a.witness));
      ctx.record("j", a.j_ratio);
    };
    out.push_back(std::move(c));
  }
}

}  // namespace grpverify::claims

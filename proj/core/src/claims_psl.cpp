#include "claims_common.hpp"

namespace grpverify::claims {
namespace {

std::string q_expr(const char* kind, std::uint64_t q) {
  return std::string(kind) + "(2," + std::to_string(q) + ")";
}

std::string key(const std::string& base, std::uint64_t v) { return base + "." + std::to_string(v); }

// PSL(2,q) inside PGL(2,q); both act on the same projective line.
ElementSet psl_inside(ClaimContext& ctx, std::uint64_t q) {
  return ctx.handle(q_expr("PGL", q)).generated(ctx.handle(q_expr("PSL", q)).generators());
}

void iso_check(ClaimContext& ctx, const std::string& k, const std::string& a, const std::string& b) {
  ctx.record_bool(k, is_isomorphic(ctx.group(a), ctx.group(b)), a + " vs " + b);
}

}  // namespace

void add_psl(std::vector<ClaimRecord>& out) {
  {
    ClaimRecord c;
    c.id = "THM-4.1-i";
    c.paper_ref = "theorem:PSL-PGL-basic: \"The group $\\PSL_2(\\mathbf{F}_{p^k})$ is simple,\"";
    c.kind = CheckKind::NormalList;
    const std::vector<std::uint64_t> qs = {2, 3, 4, 5, 7, 8, 9};
    for (auto q : qs) {
      c.groups.push_back(q_expr("PSL", q));
      c.expected.push_back(ex(key("normal_count", q), std::uint64_t(q <= 3 ? 3 : 2)));
    }
    c.check = [qs](ClaimContext& ctx) {
      for (auto q : qs) {
        const auto& normals = ctx.normals(q_expr("PSL", q));
        std::set<std::uint64_t> orders;
        for (const auto& n : normals) orders.insert(n.count());
        ctx.record(key("normal_count", q), std::uint64_t(normals.size()), "orders " + fmt_set(orders));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "THM-4.1-ii";
    c.paper_ref =
        "theorem:PSL-PGL-basic: \"\\PSL_2(\\mathbf{F}_4)\\cong \\PSL_2(\\mathbf{F}_5)\\cong\\mathfrak{A}_5\"";
    c.kind = CheckKind::Iso;
    c.groups = {"PSL(2,2)", "PSL(2,3)", "PSL(2,4)", "PSL(2,5)", "PSL(2,9)", "S(3)", "A(4)", "A(5)", "A(6)"};
    c.expected = {ex_bool("PSL(2,2)~S3", true), ex_bool("PSL(2,3)~A4", true), ex_bool("PSL(2,4)~A5", true),
                  ex_bool("PSL(2,5)~A5", true), ex_bool("PSL(2,9)~A6", true)};
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      const std::uint64_t full = q * (q * q - 1);
      c.expected.push_back(ex(key("order.PGL", q), full));
      c.expected.push_back(ex(key("order.PSL", q), q % 2 == 0 ? full : full / 2));
    }
    c.check = [](ClaimContext& ctx) {
      iso_check(ctx, "PSL(2,2)~S3", "PSL(2,2)", "S(3)");
      iso_check(ctx, "PSL(2,3)~A4", "PSL(2,3)", "A(4)");
      iso_check(ctx, "PSL(2,4)~A5", "PSL(2,4)", "A(5)");
      iso_check(ctx, "PSL(2,5)~A5", "PSL(2,5)", "A(5)");
      iso_check(ctx, "PSL(2,9)~A6", "PSL(2,9)", "A(6)");
      for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        ctx.record(key("order.PGL", q), ctx.handle(q_expr("PGL", q)).order());
        ctx.record(key("order.PSL", q), ctx.handle(q_expr("PSL", q)).order());
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "THM-4.1-iii";
    c.paper_ref = "theorem:PSL-PGL-basic: \"\\PGL_2(\\mathbf{F}_{3})\\cong \\mathfrak{S}_4.\"";
    c.kind = CheckKind::Iso;
    c.groups = {"PGL(2,2)", "PGL(2,3)", "S(3)", "S(4)"};
    c.expected = {ex_bool("PGL(2,2)~S3", true), ex_bool("PGL(2,3)~S4", true)};
    c.check = [](ClaimContext& ctx) {
      iso_check(ctx, "PGL(2,2)~S3", "PGL(2,2)", "S(3)");
      iso_check(ctx, "PGL(2,3)~S4", "PGL(2,3)", "S(4)");
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "THM-4.1-iv";
    c.paper_ref =
        "theorem:PSL-PGL-basic: \"$\\PGL_2(\\mathbf{F}_{p^k})$, and the centralizer of the subgroup\"";
    c.kind = CheckKind::NormalList;
    const std::vector<std::uint64_t> qs = {5, 7, 9};
    for (auto q : qs) {
      c.groups.push_back(q_expr("PGL", q));
      c.expected.push_back(ex(key("centralizer", q), std::uint64_t{1}));
      c.expected.push_back(ex(key("center.PGL", q), std::uint64_t{1}));
      c.expected.push_back(ex(key("center.PSL", q), std::uint64_t{1}));
    }
    c.check = [qs](ClaimContext& ctx) {
      for (auto q : qs) {
        const auto& m = ctx.group(q_expr("PGL", q));
        const ElementSet psl = psl_inside(ctx, q);
        ctx.record(key("centralizer", q), std::uint64_t(centralizer(m, psl).count()));
        ctx.record(key("center.PGL", q), std::uint64_t(center(m).count()));
        ctx.record(key("center.PSL", q), std::uint64_t(center(ctx.group(q_expr("PSL", q))).count()));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "THM-4.1-v";
    c.paper_ref = "theorem:PSL-PGL-basic: \"The subgroup $\\PSL_2(\\mathbf{F}_{p^k})$ is characteristic\"";
    c.kind = CheckKind::Characteristic;
    const std::vector<std::uint64_t> qs = {3, 5, 7, 9};
    for (auto q : qs) {
      c.groups.push_back(q_expr("PGL", q));
      c.expected.push_back(ex_bool(key("derived_is_PSL", q), true));
      c.expected.push_back(ex_bool(key("characteristic", q), true));
    }
    c.check = [qs](ClaimContext& ctx) {
      for (auto q : qs) {
        const std::string g = q_expr("PGL", q);
        const auto& m = ctx.group(g);
        const ElementSet psl = psl_inside(ctx, q);
        const ElementSet d = derived_subgroup(m);
        ctx.record_bool(key("derived_is_PSL", q), d == psl,
                        "derived order " + std::to_string(d.count()) + ", PSL order " + std::to_string(psl.count()));
        ctx.record_bool(key("characteristic", q), preserved_by_all(ctx.aut(g).automorphisms, psl));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "THM-4.2";
    c.paper_ref =
        "theorem:Out-PSL: \"\\Out(\\PSL_2(\\mathbf{F}_{p^k}))\\cong \\boldsymbol{\\mu}_2\\times \\boldsymbol{\\mu}_k.\"";
    c.kind = CheckKind::AutOrder;
    const std::map<std::uint64_t, std::uint64_t> outs = {{4, 2}, {5, 2}, {7, 2}, {8, 3}, {9, 4}, {11, 2}, {13, 2}};
    for (const auto& [q, o] : outs) {
      c.groups.push_back(q_expr("PSL", q));
      c.expected.push_back(ex(key("out", q), o));
    }
    c.expected.push_back(ex("out_exponent.9", std::uint64_t{2}));
    c.check = [outs](ClaimContext& ctx) {
      for (const auto& [q, o] : outs) {
        (void)o;
        ctx.record(key("out", q), std::uint64_t(ctx.aut(q_expr("PSL", q)).out_order));
      }
      const std::string g = q_expr("PSL", 9);
      ctx.record("out_exponent.9", std::uint64_t(exponent(outer_group(ctx.group(g), ctx.aut(g)))));
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "LEM-4.3";
    c.paper_ref = "lemma:restriction-Aut: \"\\Aut(G)\\to\\Aut(H), \\quad \\sigma\\mapsto \\sigma\\vert_H,\"";
    c.kind = CheckKind::AutOrder;
    c.groups = {"S(4)", "PGL(2,5)", "PGL(2,7)"};
    for (const char* t : {"S4", "PGL5", "PGL7"}) {
      c.expected.push_back(ex_bool(std::string("hypotheses.") + t, true));
      c.expected.push_back(ex_bool(std::string("injective.") + t, true));
    }
    c.check = [](ClaimContext& ctx) {
      const std::vector<std::pair<std::string, std::string>> cases = {
          {"S4", "S(4)"}, {"PGL5", "PGL(2,5)"}, {"PGL7", "PGL(2,7)"}};
      for (const auto& [tag, g] : cases) {
        const auto& m = ctx.group(g);
        const auto& aut = ctx.aut(g);
        const ElementSet h = derived_subgroup(m);
        const bool hyp = preserved_by_all(aut.automorphisms, h) && centralizer(m, h).count() == 1;
        std::set<std::vector<Index>> restrictions;
        const auto elems = h.indices();
        for (const auto& sigma : aut.automorphisms) {
          std::vector<Index> r;
          for (Index x : elems) r.push_back(sigma[x]);
          restrictions.insert(std::move(r));
        }
        ctx.record_bool("hypotheses." + tag, hyp);
        ctx.record_bool("injective." + tag, restrictions.size() == aut.order(),
                        std::to_string(restrictions.size()) + " restrictions of " + std::to_string(aut.order()));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "PROP-4.4";
    c.paper_ref = "proposition:Aut-PSL-PGL: \"\\Aut(\\PSL_2(\\mathbf{F}_{p^k}))\\cong\"";
    c.kind = CheckKind::AutOrder;
    const std::map<std::uint64_t, std::uint64_t> orders = {{4, 120}, {5, 120}, {7, 336}, {9, 1440}};
    for (const auto& [q, n] : orders) {
      c.groups.push_back(q_expr("PSL", q));
      c.groups.push_back(q_expr("PGL", q));
      c.expected.push_back(ex(key("aut.PSL", q), n));
      c.expected.push_back(ex(key("aut.PGL", q), n));
    }
    c.expected.push_back(ex_bool("Aut(PSL(2,5))~PGL(2,5)", true));
    c.expected.push_back(ex_bool("Aut(PSL(2,7))~PGL(2,7)", true));
    c.check = [orders](ClaimContext& ctx) {
      for (const auto& [q, n] : orders) {
        (void)n;
        ctx.record(key("aut.PSL", q), std::uint64_t(ctx.aut(q_expr("PSL", q)).order()));
        ctx.record(key("aut.PGL", q), std::uint64_t(ctx.aut(q_expr("PGL", q)).order()));
      }
      for (std::uint64_t q : {5, 7}) {
        const MaterializedGroup a = ctx.aut(q_expr("PSL", q)).as_group();
        ctx.record_bool("Aut(PSL(2," + std::to_string(q) + "))~PGL(2," + std::to_string(q) + ")",
                        is_isomorphic(a, ctx.group(q_expr("PGL", q))));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "COR-4.5";
    c.paper_ref = "corollary:Out-PGL: \"\\Out(\\PGL_2(\\mathbf{F}_{p^k}))\\cong \\boldsymbol{\\mu}_k.\"";
    c.kind = CheckKind::AutOrder;
    const std::map<std::uint64_t, std::uint64_t> outs = {{4, 2}, {5, 1}, {7, 1}, {8, 3}, {9, 2}};
    for (const auto& [q, o] : outs) {
      c.groups.push_back(q_expr("PGL", q));
      c.expected.push_back(ex(key("out.PGL", q), o));
    }
    c.groups.insert(c.groups.end(), {"A(4)", "S(4)", "A(5)"});
    c.expected.insert(c.expected.end(),
                      {ex("aut.A4", std::uint64_t{24}), ex("out.A4", std::uint64_t{2}), ex("aut.S4", std::uint64_t{24}),
                       ex("out.S4", std::uint64_t{1}), ex("aut.A5", std::uint64_t{120}), ex("out.A5", std::uint64_t{2})});
    c.check = [outs](ClaimContext& ctx) {
      for (const auto& [q, o] : outs) {
        (void)o;
        ctx.record(key("out.PGL", q), std::uint64_t(ctx.aut(q_expr("PGL", q)).out_order));
      }
      for (const auto& [tag, g] : std::vector<std::pair<std::string, std::string>>{
               {"A4", "A(4)"}, {"S4", "S(4)"}, {"A5", "A(5)"}}) {
        ctx.record("aut." + tag, std::uint64_t(ctx.aut(g).order()));
        ctx.record("out." + tag, std::uint64_t(ctx.aut(g).out_order));
      }
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "LEM-10.11";
    c.paper_ref =
        "lemma:Aut-SL23: \"\\Aut(\\boldsymbol{\\mu}_3\\rtimes\\boldsymbol{\\mu}_4)\\cong\\mathrm D_{12}.\"";
    c.kind = CheckKind::AutOrder;
    c.groups = {"semi(C(3),C(4),inv)", "D(6)"};
    c.expected = {ex("aut_order", std::uint64_t{12}), ex_bool("dihedral", true)};
    c.check = [](ClaimContext& ctx) {
      const auto& aut = ctx.aut("semi(C(3),C(4),inv)");
      ctx.record("aut_order", std::uint64_t(aut.order()));
      ctx.record_bool("dihedral", is_isomorphic(aut.as_group(), ctx.group("D(6)")));
    };
    out.push_back(std::move(c));
  }
}

}  // namespace grpverify::claims

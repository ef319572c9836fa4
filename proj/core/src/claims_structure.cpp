#include "claims_common.hpp"

namespace grpverify::claims {
namespace {

std::vector<std::string> corpus_upto(ClaimContext& ctx, std::size_t bound) {
  std::vector<std::string> out;
  for (const auto& e : small_corpus())
    if (ctx.handle(e).order() <= bound) out.push_back(e);
  return out;
}

std::set<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  if (n > 1) out.insert(n);
  return out;
}

// Largest j over the subgroup classes of m.
Rational max_j(ClaimContext& ctx, const std::string& expr, std::uint64_t p) {
  const auto& m = ctx.group(expr);
  Rational best = 0;
  for (const auto& c : ctx.classes(expr)) {
    const MaterializedGroup sub = m.subgroup(c.representative);
    best = std::max(best, j_analysis(sub, p).j_ratio);
  }
  return best;
}

// Largest characteristic-abelian ratio over the subgroup classes of m.
Rational max_char_j(ClaimContext& ctx, const std::string& expr, std::uint64_t p) {
  const auto& m = ctx.group(expr);
  Rational best = 0;
  for (const auto& c : ctx.classes(expr)) {
    const MaterializedGroup sub = m.subgroup(c.representative);
    const AutGroup aut = automorphism_group(sub, ctx.caps().max_aut_order);
    const auto s = min_preserved(sub, p, normal_subgroups(sub), false, &aut.automorphisms,
                                 ctx.caps().max_aut_order);
    best = std::max(best, ratio(s.index, sub.order(), p));
  }
  return best;
}

}  // namespace

void add_structure(std::vector<ClaimRecord>& out) {
  {
    ClaimRecord c;
    c.id = "LEM-3.1";
    c.paper_ref =
        "lemma:dihedral-group-basic: \"Then the cyclic subgroup $G'$ of order $n$ is characteristic in $G$.\"";
    c.kind = CheckKind::Characteristic;
    for (int n = 3; n <= 12; ++n) c.groups.push_back("D(" + std::to_string(n) + ")");
    c.expected = {ex("characteristic", std::uint64_t{10}), ex("self_centralizing", std::uint64_t{10})};
    c.check = [groups = c.groups](ClaimContext& ctx) {
      std::uint64_t chr = 0, selfc = 0;
      std::string bad;
      for (const auto& g : groups) {
        const auto& m = ctx.group(g);
        const std::size_t n = m.order() / 2;
        std::optional<ElementSet> rot;
        for (const auto& s : ctx.normals(g))
          if (s.count() == n && is_cyclic(m, s)) rot = s;
        if (!rot) {
          bad += g + " has no normal cyclic subgroup of index 2; ";
          continue;
        }
        if (preserved_by_all(ctx.aut(g).automorphisms, *rot))
          ++chr;
        else
          bad += g + " rotation subgroup moved by Aut; ";
        if (centralizer(m, *rot).count() == n)
          ++selfc;
        else
          bad += g + " centralizer larger than rotations; ";
      }
      ctx.record("characteristic", chr, bad);
      ctx.record("self_centralizing", selfc, bad);
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "THM-3.2";
    c.paper_ref = "theorem:Chermak-Delgado: \"subgroup of index at most~$I^2$.\"";
    c.kind = CheckKind::CdIndex;
    c.groups = small_corpus();
    const std::uint64_t n = small_corpus().size();
    c.expected = {ex("checked", n), ex("characteristic", n), ex("abelian", n),
                  ex("contains_center", n), ex("within_I2", n)};
    c.check = [](ClaimContext& ctx) {
      std::uint64_t checked = 0, chr = 0, ab = 0, zc = 0, within = 0;
      std::string bad;
      for (const auto& g : corpus_upto(ctx, 100)) {
        const auto& m = ctx.group(g);
        const auto cd = chermak_delgado(m, ctx.caps().max_subgroup_order);
        const std::size_t index = m.order() / cd.subgroup.count();
        const std::size_t i = min_abelian_index(m, ctx.classes(g));
        ++checked;
        if (preserved_by_all(ctx.aut(g).automorphisms, cd.subgroup)) ++chr;
        else bad += g + " CD subgroup not characteristic; ";
        if (is_abelian(m, cd.subgroup)) ++ab;
        else bad += g + " CD subgroup not abelian; ";
        if (center(m).subset_of(cd.subgroup)) ++zc;
        else bad += g + " CD subgroup misses the center; ";
        if (index <= i * i) ++within;
        else bad += g + " index " + std::to_string(index) + " > I^2 = " + std::to_string(i * i) + "; ";
      }
      ctx.record("checked", checked);
      ctx.record("characteristic", chr, bad);
      ctx.record("abelian", ab, bad);
      ctx.record("contains_center", zc, bad);
      ctx.record("within_I2", within, bad);
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "COR-3.3";
    c.paper_ref =
        "corollary:Chermak-Delgado: \"subgroup of order coprime to $p$ and index "
        "at most~\\mbox{$J^2\\cdot |G_{(p)}|^{2e+1}$}.\"";
    c.kind = CheckKind::CdIndex;
    c.groups = small_corpus();
    c.primes = {2, 3, 5, 7};
    const std::uint64_t n = small_corpus().size() * 4;
    c.expected = {ex("checked", n), ex("characteristic", n), ex("within_bound", n)};
    c.check = [](ClaimContext& ctx) {
      std::uint64_t checked = 0, chr = 0, within = 0;
      std::string bad;
      for (const auto& g : corpus_upto(ctx, 100)) {
        const auto& m = ctx.group(g);
        const auto cd = chermak_delgado(m, ctx.caps().max_subgroup_order);
        const std::size_t i = min_abelian_index(m, ctx.classes(g));
        for (std::uint64_t p : {2, 3, 5, 7}) {
          ++checked;
          const auto a = coprime_part(m, cd.subgroup, p);
          if (!a) {
            bad += g + " coprime part is not a subgroup; ";
            continue;
          }
          if (preserved_by_all(ctx.aut(g).automorphisms, *a)) ++chr;
          else bad += g + " coprime part not characteristic; ";
          const std::uint64_t index = m.order() / a->count();
          const std::uint64_t bound = std::uint64_t(i) * i * p_part(m.order(), p);
          if (index <= bound) ++within;
          else bad += g + " p=" + std::to_string(p) + " index " + std::to_string(index) + " > " +
                      std::to_string(bound) + "; ";
        }
      }
      ctx.record("checked", checked);
      ctx.record("characteristic", chr, bad);
      ctx.record("within_bound", within, bad);
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "LEM-3.4";
    c.paper_ref = "lemma:large-abelian: \"J=\\frac{|\\bar{G}|}{|\\bar{G}_{(p)}|^e}.\"";
    c.kind = CheckKind::JSweep;
    c.groups = {"HESS",
                "WD(5)",
                "semi(EA(3,3),S(4),quotperm)",
                "semi(C(7),C(3),explicit[2])",
                "semi(EA(2,3),C(7),explicit[0 0 1 1 0 1 0 1 0])",
                "semi(C(5),C(4),explicit[2])",
                "prod(C(6),S(3))"};
    c.primes = {2, 3, 5, 7};
    const std::uint64_t n = c.groups.size() * c.primes.size() * 2;
    c.expected = {ex("checked", n), ex("coprime_part_within", n), ex("min_index_within", n)};
    c.check = [groups = c.groups](ClaimContext& ctx) {
      std::uint64_t checked = 0, part = 0, minimal = 0;
      std::string bad;
      for (const auto& g : groups) {
        const auto& h = ctx.handle(g);
        if (h.normal_generators.empty()) throw std::logic_error(g + " records no normal factor");
        const auto& m = ctx.group(g);
        const ElementSet n = h.generated(h.normal_generators);
        if (!is_abelian(m, n) || !is_normal(m, n)) throw std::logic_error(g + " normal factor is not abelian");
        const std::uint64_t quot = m.order() / n.count();
        for (std::uint64_t p : {2, 3, 5, 7}) {
          const auto hp = coprime_part(m, n, p);
          const JAnalysis a = j_analysis(m, p, ctx.normals(g));
          for (unsigned e : {1u, 3u}) {
            ++checked;
            // J |G_p|^e with J = |Gbar| / |Gbar_p|^e
            const Rational bound = Rational(BigInt(quot)) /
                                   Rational(ipow(BigInt(p_part(quot, p)), e)) *
                                   Rational(ipow(BigInt(p_part(m.order(), p)), e));
            const std::string tag = g + " p=" + std::to_string(p) + " e=" + std::to_string(e);
            if (hp && is_normal(m, *hp) && Rational(BigInt(m.order() / hp->count())) <= bound) ++part;
            else bad += tag + " coprime part exceeds " + to_string(bound) + "; ";
            if (Rational(BigInt(a.min_index)) <= bound) ++minimal;
            else bad += tag + " min index exceeds " + to_string(bound) + "; ";
          }
        }
      }
      ctx.record("checked", checked);
      ctx.record("coprime_part_within", part, bad);
      ctx.record("min_index_within", minimal, bad);
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "LEM-3.5";
    c.paper_ref = "lemma:product: \"and index at most~\\mbox{$J_1\\cdot J_2\\cdot |G_{(p)}|^e$}.\"";
    c.kind = CheckKind::JSweep;
    c.groups = {"prod(S(3),D(4))", "prod(S(3),S(3))"};
    c.primes = {2, 3};
    c.expected = {ex("violations", std::uint64_t{0}), ex("subgroups_checked", std::uint64_t{152})};
    c.check = [](ClaimContext& ctx) {
      const std::vector<std::pair<std::string, std::string>> pairs = {{"S(3)", "D(4)"}, {"S(3)", "S(3)"}};
      std::uint64_t violations = 0, checked = 0;
      std::string bad;
      for (const auto& [a, b] : pairs) {
        const std::string g = "prod(" + a + "," + b + ")";
        const auto& m = ctx.group(g);
        for (std::uint64_t p : {2, 3}) {
          const Rational bound = max_j(ctx, a, p) * max_char_j(ctx, b, p);
          for (const auto& cl : ctx.classes(g)) {
            ++checked;
            const JAnalysis r = j_analysis(m.subgroup(cl.representative), p);
            if (r.j_ratio > bound) {
              ++violations;
              bad += g + " p=" + std::to_string(p) + " " + describe(m, cl.representative) + " j=" +
                     to_string(r.j_ratio) + " > " + to_string(bound) + "; ";
            }
          }
        }
      }
      ctx.record("violations", violations, bad);
      ctx.record("subgroups_checked", checked);
    };
    out.push_back(std::move(c));
  }
  {
    ClaimRecord c;
    c.id = "THM-3.7";
    c.paper_ref = "theorem:normal-in-a-p-group: \"positive integer~$m$ such that $m(m+1)\\geqslant 2n$.\"";
    c.kind = CheckKind::Arithmetic;
    c.groups = small_corpus();
    c.expected = {ex("sylow_checked", std::uint64_t{68}), ex("violations", std::uint64_t{0})};
    c.check = [](ClaimContext& ctx) {
      std::uint64_t checked = 0, violations = 0;
      std::string bad;
      for (const auto& g : small_corpus()) {
        const auto& m = ctx.group(g);
        for (auto p : prime_divisors(m.order())) {
          const MaterializedGroup s = m.subgroup(sylow_subgroup(m, p));
          unsigned n = 0;
          for (std::size_t k = s.order(); k > 1; k /= p) ++n;
          unsigned best = 0;
          for (const auto& h : normal_subgroups(s)) {
            if (!is_abelian(s, h)) continue;
            unsigned e = 0;
            for (std::size_t k = h.count(); k > 1; k /= p) ++e;
            best = std::max(best, e);
          }
          ++checked;
          if (best * (best + 1) < 2 * n) {
            ++violations;
            bad += g + " p=" + std::to_string(p) + " n=" + std::to_string(n) + " m=" + std::to_string(best) + "; ";
          }
        }
      }
      ctx.record("sylow_checked", checked);
      ctx.record("violations", violations, bad);
    };
    out.push_back(std::move(c));
  }
}

}  // namespace grpverify::claims

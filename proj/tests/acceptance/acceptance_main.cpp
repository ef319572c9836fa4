// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "grpverify/autmorph.hpp"
#include "grpverify/construct.hpp"
#include "grpverify/lattice.hpp"
#include "grpverify/ledger.hpp"
#include "oracles.hpp"

namespace grpverify {
namespace {

using Seconds = std::chrono::duration<double>;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void limit(double seconds, double budget, const std::string& what) {
    std::ostringstream s;
    s << what << " took " << std::fixed << std::setprecision(1) << seconds << " s > " << budget << " s";
    require(seconds < budget, s.str());
  }
};

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

const MaterializedGroup& group(const std::string& e) {
  static std::map<std::string, GroupHandle> cache;
  auto it = cache.find(e);
  if (it == cache.end()) it = cache.emplace(e, build(e)).first;
  return it->second.materialized();
}

// Full ledger run shared by the claim-backed criteria.
struct Ledger {
  std::vector<ClaimRecord> claims = builtin_claims();
  std::vector<ClaimOutcome> outcomes;

  Ledger() {
    RunOptions opts;
    opts.jobs = jobs();
    outcomes = run_detailed(claims, opts);
  }

  const ClaimOutcome& outcome(const std::string& id) const {
    for (std::size_t i = 0; i < claims.size(); ++i)
      if (claims[i].id == id) return outcomes[i];
    throw std::logic_error("unknown claim " + id);
  }
  const ClaimRecord& record(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return c;
    throw std::logic_error("unknown claim " + id);
  }
  std::string observed(const std::string& id, const std::string& key) const {
    for (const auto& o : outcome(id).observations)
      if (o.key == key) return o.value;
    return "<missing>";
  }
  Rational constant(const std::string& id, const std::string& key) const {
    for (const auto& [k, v] : record(id).constants)
      if (k == key) return v;
    throw std::logic_error(id + " has no constant " + key);
  }
  double seconds(const std::vector<std::string>& ids) const {
    std::int64_t ms = 0;
    for (const auto& id : ids) ms += outcome(id).result.runtime_ms;
    return static_cast<double>(ms) / 1000.0;
  }
  void require_pass(Check& c, const std::vector<std::string>& ids) const {
    for (const auto& id : ids) {
      const auto& r = outcome(id).result;
      c.require(r.status == ClaimStatus::Pass, id + " " + to_string(r.status) + ": " + r.witness.value_or(""));
    }
  }
  void require_value(Check& c, const std::string& id, const std::string& key, const std::string& want) const {
    const std::string got = observed(id, key);
    c.require(got == want, id + " " + key + " = " + got + ", want " + want);
  }
};

Check exceptional_isomorphisms() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"PGL(2,2)", "S(3)"}, {"PGL(2,3)", "S(4)"}, {"PSL(2,3)", "A(4)"}, {"PSL(2,4)", "A(5)"},
      {"PSL(2,5)", "A(5)"}, {"PSL(2,9)", "A(6)"}};
  for (const auto& [a, b] : pairs) c.require(is_isomorphic(group(a), group(b)), a + " !~ " + b);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const std::uint64_t pgl = q * (q * q - 1);
    const std::string qs = std::to_string(q);
    c.require(build("PGL(2," + qs + ")").order() == pgl, "|PGL(2," + qs + ")|");
    c.require(build("PSL(2," + qs + ")").order() == (q % 2 ? pgl / 2 : pgl), "|PSL(2," + qs + ")|");
  }
  c.limit(Seconds(std::chrono::steady_clock::now() - start).count(), 10, "isomorphisms");
  return c;
}

Check simplicity() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  for (int q : {4, 5, 7, 8, 9}) {
    const std::string qs = std::to_string(q);
    c.require(normal_subgroups(group("PSL(2," + qs + ")")).size() == 2, "PSL(2," + qs + ") not simple");
  }
  for (int q : {5, 7, 9}) {
    const std::string qs = std::to_string(q);
    const GroupHandle pgl = build("PGL(2," + qs + ")");
    const GroupHandle psl = build("PSL(2," + qs + ")");
    const auto& m = pgl.materialized();
    const ElementSet inside = pgl.generated(psl.generators());
    c.require(inside.count() == psl.order(), "PSL(2," + qs + ") embedding");
    c.require(centralizer(m, inside).count() == 1, "centralizer of PSL(2," + qs + ") nontrivial");
    c.require(derived_subgroup(m) == inside, "derived(PGL(2," + qs + ")) != PSL");
  }
  c.limit(Seconds(std::chrono::steady_clock::now() - start).count(), 30, "simplicity");
  return c;
}

Check automorphism_orders() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto aut = [](const char* e) { return automorphism_group(group(e), 2500, jobs()); };
  c.require(aut("A(4)").order() == 24, "|Aut(A4)|");
  c.require(aut("S(4)").order() == 24, "|Aut(S4)|");
  c.require(aut("A(5)").order() == 120, "|Aut(A5)|");
  const AutGroup dic = aut("semi(C(3),C(4),inv)");
  c.require(dic.order() == 12, "|Aut(C3:C4)|");
  c.require(is_isomorphic(dic.as_group(), group("D(6)")), "Aut(C3:C4) not dihedral");
  const AutGroup a6 = aut("PSL(2,9)");
  c.require(a6.order() == 1440, "|Aut(PSL(2,9))| = " + std::to_string(a6.order()));
  c.require(a6.out_order == 4, "|Out(PSL(2,9))| = " + std::to_string(a6.out_order));
  c.limit(Seconds(std::chrono::steady_clock::now() - start).count(), 300, "automorphisms");
  return c;
}

Check sweeps(const Ledger& l) {
  Check c;
  // (i) symmetric group on five points
  l.require_pass(c, {"LEM-3.8-i"});
  l.require_value(c, "LEM-3.8-i", "order_failures.2", "{5}");
  l.require_value(c, "LEM-3.8-i", "order_failures.3", "{20}");
  l.require_value(c, "LEM-3.8-i", "order20_is_F20", "true");
  l.require_value(c, "LEM-3.8-i", "order5_is_cyclic", "true");
  l.require_value(c, "LEM-3.8-i", "rescue_index.3", "4");
  for (const char* p : {"2", "3", "5", "7"}) l.require_value(c, "LEM-3.8-i", std::string("j_failures.") + p, "{}");
  c.limit(l.seconds({"LEM-3.8-i"}), 60, "(i)");
  // (iv) symmetric group on six points
  l.require_pass(c, {"LEM-3.8-iv"});
  for (const char* p : {"2", "3", "5", "7"}) l.require_value(c, "LEM-3.8-iv", std::string("j_failures.") + p, "{}");
  c.limit(l.seconds({"LEM-3.8-iv"}), 300, "(iv)");
  // (ii)/(iii) Weyl group of type D5 and its even part
  l.require_pass(c, {"LEM-3.8-ii", "LEM-3.8-iii"});
  l.require_value(c, "LEM-3.8-ii", "j_failures.3", "{320}");
  l.require_value(c, "LEM-3.8-ii", "order320_is_predicted", "true");
  for (const char* p : {"2", "5", "7"}) l.require_value(c, "LEM-3.8-ii", std::string("j_failures.") + p, "{}");
  for (const char* p : {"2", "3", "5", "7"}) l.require_value(c, "LEM-3.8-iii", std::string("j_failures.") + p, "{}");
  c.limit(l.seconds({"LEM-3.8-ii", "LEM-3.8-iii"}), 1800, "(ii)/(iii)");
  // (v) Heisenberg group extended by SL(2,3): exceptions are the whole group
  // of order 648 and the subgroups of order 162.
  l.require_pass(c, {"LEM-3.8-v"});
  l.require_value(c, "LEM-3.8-v", "j_failures.5", "{162,648}");
  for (const char* p : {"2", "3", "7"}) l.require_value(c, "LEM-3.8-v", std::string("j_failures.") + p, "{}");
  c.limit(l.seconds({"LEM-3.8-v"}), 900, "(v)");
  // (vi) both module structures on EA(3,3)
  l.require_pass(c, {"LEM-3.8-vi"});
  for (const char* tag : {"quotperm", "sumzero"}) {
    l.require_value(c, "LEM-3.8-vi", std::string("order.") + tag, "648");
    for (const char* p : {"2", "3", "5", "7"})
      l.require_value(c, "LEM-3.8-vi", std::string("j_failures.") + tag + "." + p, "{}");
  }
  c.limit(l.seconds({"LEM-3.8-vi"}), 900, "(vi)");
  // (vii) orders 2^a 3^b
  l.require_pass(c, {"LEM-3.8-vii"});
  l.require_value(c, "LEM-3.8-vii", "order_exceptions.5", "{192,288,576}");
  c.limit(l.seconds({"LEM-3.8-vii"}), 1, "(vii)");
  return c;
}

Check sharpness() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto expect = [&](const std::string& e, std::uint64_t p, std::uint64_t index) {
    const JAnalysis a = j_analysis(group(e), p);
    c.require(a.min_index == index, e + " p=" + std::to_string(p) + " min_index " + std::to_string(a.min_index));
    c.require(a.j_ratio == Rational(index), e + " p=" + std::to_string(p) + " j " + to_string(a.j_ratio));
  };
  expect("swapsq(A(5))", 7, 7200);
  expect("swapsq(A(5))", 11, 7200);
  expect("PSL(2,7)", 5, 168);
  expect("semi(EA(2,4),pgroup(5,\"(1 2 3 4 5)\",\"(2 5)(3 4)\"),evenperm)", 3, 10);
  expect("semi(C(7),C(3),explicit[2])", 2, 3);
  c.limit(Seconds(std::chrono::steady_clock::now() - start).count(), 120, "sharpness");
  return c;
}

Check chermak_delgado_index() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::set<ExprKind> kinds;
  std::function<void(const GroupExpr&)> collect = [&](const GroupExpr& e) {
    kinds.insert(e.kind);
    for (const auto& child : e.children) collect(child);
  };
  for (const auto& e : testing::corpus()) {
    const auto& m = group(e);
    if (m.order() > 100) continue;
    ++checked;
    collect(parse_expr(e));
    std::size_t best_abelian = 0;
    for (const auto& s : all_subgroups(m))
      if (testing::brute_is_abelian(m, s)) best_abelian = std::max(best_abelian, s.count());
    const std::size_t index_bound = m.order() / best_abelian;
    const ElementSet cd = chermak_delgado(m).subgroup;
    c.require(is_characteristic(m, cd, 2500), e + " CD subgroup not characteristic");
    c.require(testing::brute_is_abelian(m, cd), e + " CD subgroup not abelian");
    c.require(center(m).subset_of(cd), e + " CD subgroup misses the center");
    c.require(m.order() / cd.count() <= index_bound * index_bound, e + " CD index above I^2");
  }
  c.require(checked >= 25, "only " + std::to_string(checked) + " corpus groups of order <= 100");
  // Constructors whose smallest instance has order above 100 cannot appear.
  for (ExprKind k : {ExprKind::Cyclic, ExprKind::Dihedral, ExprKind::Symmetric, ExprKind::Alternating,
                     ExprKind::ElemAbelian, ExprKind::Heisenberg, ExprKind::GL2, ExprKind::SL2, ExprKind::PGL2,
                     ExprKind::PSL2, ExprKind::WeylD, ExprKind::Product, ExprKind::SwapSquare,
                     ExprKind::Semidirect, ExprKind::PermGroup})
    c.require(kinds.count(k) == 1, "constructor " + std::to_string(static_cast<int>(k)) + " not covered");
  c.limit(Seconds(std::chrono::steady_clock::now() - start).count(), 600, "Chermak-Delgado");
  return c;
}

Check semidirect_lemmas(const Ledger& l) {
  Check c;
  const std::vector<std::string> ids = {"LEM-5.1", "COR-5.2"};
  l.require_pass(c, ids);
  // Instances p^m = 3, 9, 5, 8.
  const std::vector<std::uint64_t> pm = {3, 9, 5, 8};
  for (std::size_t i = 0; i < pm.size(); ++i) {
    const std::string k = "." + std::to_string(i);
    c.require(std::stoull(l.observed("LEM-5.1", "max_t" + k)) <= pm[i] - 1, "t above p^m-1 for instance " + k);
    l.require_value(c, "LEM-5.1", "within" + k, "1");
    l.require_value(c, "COR-5.2", "L'_characteristic" + k, "true");
    c.require(std::stoull(l.observed("COR-5.2", "index_in_L" + k)) <= pm[i], "index in L above p^m" + k);
    c.require(std::stoull(l.observed("COR-5.2", "index_in_R" + k)) <= pm[i] * pm[i], "index in R above p^2m" + k);
  }
  c.limit(l.seconds(ids), 60, "semidirect lemmas");
  return c;
}

Check constant_arithmetic(const Ledger& l) {
  Check c;
  struct Table {
    const char* id;
    std::vector<std::pair<std::uint64_t, Rational>> values;
    bool exact_chain;
  };
  const std::vector<Table> tables = {
      {"CONST-P1", {{7, 60}, {5, 24}, {3, 4}, {2, 1}}, true},
      {"COR-7.3", {{7, 7200}, {5, 72}, {3, 10}, {2, 1}}, false},
      {"PROP-9.2", {{7, 7200}, {5, 144}, {3, Rational(800, 81)}, {2, 2}}, true},
      {"CONST-JdP", {{7, 7200}, {5, 144}, {3, 10}, {2, 3}}, true},
      {"CONST-JdP-odd", {{7, 7200}, {5, 168}, {3, 10}}, true},
      {"THM-1.9", {{7, 7200}, {5, 168}, {3, 10}}, true},
  };
  std::vector<std::string> ids;
  for (const auto& t : tables) {
    ids.push_back(t.id);
    l.require_pass(c, {t.id});
    for (const auto& [p, v] : t.values) {
      const std::string ps = std::to_string(p);
      c.require(l.constant(t.id, "J." + ps) == v, std::string(t.id) + " table at p=" + ps);
      const Rational chain = parse_rational(l.observed(t.id, "case_max." + ps));
      if (t.exact_chain)
        c.require(chain == v, std::string(t.id) + " chain at p=" + ps + " gives " + to_string(chain));
      else
        c.require(chain <= v, std::string(t.id) + " chain at p=" + ps + " exceeds the table");
    }
  }
  c.limit(l.seconds(ids), 1, "constant chains");
  return c;
}

Check oracle_equivalence() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto canonical = [](std::vector<ElementSet> v) {
    std::sort(v.begin(), v.end(), [](const ElementSet& a, const ElementSet& b) { return a.canonical_less(b); });
    return v;
  };
  std::size_t small = 0;
  std::size_t medium = 0;
  for (const auto& e : testing::corpus()) {
    const auto& m = group(e);
    if (m.order() <= 24) {
      ++small;
      c.require(canonical(all_subgroups(m)) == canonical(testing::power_set_subgroups(m)), e + " subgroup lists differ");
    }
    if (m.order() <= 200) {
      ++medium;
      std::vector<ElementSet> normals;
      for (const auto& s : all_subgroups(m))
        if (is_normal(m, s)) normals.push_back(s);
      for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        const JAnalysis a = j_analysis(m, p);
        const JAnalysis b = j_analysis(m, p, normals);
        c.require(a.min_index == b.min_index && a.j_ratio == b.j_ratio, e + " j differs at p=" + std::to_string(p));
      }
    }
  }
  c.require(small > 0 && medium > 0, "empty corpus");
  c.limit(Seconds(std::chrono::steady_clock::now() - start).count(), 300, "oracles");
  return c;
}

std::string corrupt(const std::string& value) {
  if (value == "true") return "false";
  if (value == "false") return "true";
  if (!value.empty() && std::all_of(value.begin(), value.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    return std::to_string(std::stoull(value) + 1);
  return value + "#";
}

Check negative_control(const Ledger& l) {
  Check c;
  std::vector<ClaimResult> baseline;
  for (std::size_t i = 0; i < l.claims.size(); ++i) {
    baseline.push_back(evaluate(l.claims[i], l.outcomes[i].observations));
    c.require(baseline.back().status == ClaimStatus::Pass, l.claims[i].id + " fails before corruption");
  }
  std::size_t flips = 0;
  for (std::size_t i = 0; i < l.claims.size(); ++i) {
    for (std::size_t k = 0; k < l.claims[i].expected.size(); ++k) {
      ClaimRecord bad = l.claims[i];
      bad.expected[k].value = corrupt(bad.expected[k].value);
      for (std::size_t j = 0; j < l.claims.size(); ++j) {
        const ClaimResult r = evaluate(j == i ? bad : l.claims[j], l.outcomes[j].observations);
        if (j != i) {
          c.require(r.status == baseline[j].status, l.claims[j].id + " changed when corrupting " + l.claims[i].id);
          continue;
        }
        const bool flagged = r.status == ClaimStatus::Fail && r.witness &&
                             r.witness->find(bad.expected[k].key + ":") != std::string::npos;
        c.require(flagged, l.claims[i].id + " " + bad.expected[k].key + " not flagged");
        flips += flagged;
      }
    }
  }
  c.detail = std::to_string(flips) + " corruptions flagged" + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

}  // namespace
}  // namespace grpverify

int main() {
  using namespace grpverify;
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  std::unique_ptr<Ledger> ledger;
  auto shared = [&]() -> const Ledger& {
    if (!ledger) ledger = std::make_unique<Ledger>();
    return *ledger;
  };
  const std::vector<Criterion> criteria = {
      {"exceptional isomorphisms and orders", exceptional_isomorphisms},
      {"simplicity, centralizers, commutator subgroups", simplicity},
      {"automorphism group orders", automorphism_orders},
      {"exhaustive subgroup sweeps", [&] { return sweeps(shared()); }},
      {"sharpness witnesses", sharpness},
      {"Chermak-Delgado index bound", chermak_delgado_index},
      {"semidirect exponent and index bounds", [&] { return semidirect_lemmas(shared()); }},
      {"constant assembly", [&] { return constant_arithmetic(shared()); }},
      {"oracle equivalence", oracle_equivalence},
      {"negative control", [&] { return negative_control(shared()); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].run();
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double s = Seconds(std::chrono::steady_clock::now() - start).count();
    failed += !c.ok;
    std::cout << "criterion " << std::setw(2) << i + 1 << "  " << (c.ok ? "PASS" : "FAIL") << "  " << std::left
              << std::setw(48) << criteria[i].name << std::right << std::fixed << std::setprecision(2) << std::setw(8)
              << s << " s";
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}

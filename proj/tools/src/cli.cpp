#include "grpverify_cli/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>
#include <thread>

#include "grpverify/autmorph.hpp"
#include "grpverify/construct.hpp"
#include "grpverify/error.hpp"
#include "grpverify/lattice.hpp"
#include "grpverify/ledger.hpp"
#include "grpverify/numeric.hpp"

namespace grpverify::cli {
namespace {

struct Common {
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  Caps caps;
};

void add_caps(CLI::App* app, Common& c) {
  app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--max-order", c.caps.max_order, "Largest group that may be materialized")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-subgroup-order", c.caps.max_subgroup_order,
                  "Largest group whose subgroup lattice may be enumerated")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-aut-order", c.caps.max_aut_order, "Largest group whose Aut may be computed")
      ->check(CLI::PositiveNumber);
}

GroupHandle build_checked(const std::string& src, const Caps& caps) {
  BuildOptions opts;
  opts.max_order = caps.max_order;
  return build(parse_expr(src), opts);
}

// Short structural description of a small group.
std::string hint(const MaterializedGroup& m) {
  const std::size_t n = m.order();
  if (n == 1) return "trivial";
  const ElementSet all = m.all();
  if (is_cyclic(m, all)) return "C(" + std::to_string(n) + ")";
  if (is_abelian(m)) {
    std::uint64_t p = 0;
    unsigned k = 0;
    if (prime_power(n, p, k) && exponent(m) == p) return "EA(" + std::to_string(p) + "," + std::to_string(k) + ")";
    return "abelian of exponent " + std::to_string(exponent(m));
  }
  return "nonabelian of order " + std::to_string(n);
}

int cmd_analyze(const std::string& expr, std::uint64_t p, const Common& c, std::ostream& out) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const GroupHandle h = build_checked(expr, c.caps);
  const MaterializedGroup& m = h.materialized(c.caps.max_order);
  const JAnalysis a = j_analysis(m, p);
  const MaterializedGroup w = m.subgroup(a.witness);
  out << "group        " << h.name() << "\n"
      << "order        " << a.order << "\n"
      << "p            " << p << "\n"
      << "|G_(p)|      " << a.p_part << "\n"
      << "min_index    " << a.min_index << "\n"
      << "j_ratio      " << to_string(a.j_ratio) << "\n"
      << "witness      order " << w.order() << ", " << hint(w) << "\n";
  return kPass;
}

int cmd_subgroups(const std::string& expr, bool up_to_conjugacy, const Common& c, std::ostream& out) {
  const GroupHandle h = build_checked(expr, c.caps);
  const MaterializedGroup& m = h.materialized(c.caps.max_order);
  if (up_to_conjugacy) {
    const auto cls = subgroups_up_to_conjugacy(m, c.caps.max_subgroup_order);
    out << std::left << std::setw(8) << "order" << std::setw(8) << "class" << std::setw(8) << "normal"
        << "structure\n";
    std::size_t total = 0;
    for (const auto& s : cls) {
      total += s.class_size;
      const MaterializedGroup sub = m.subgroup(s.representative);
      out << std::setw(8) << s.order << std::setw(8) << s.class_size << std::setw(8)
          << (s.class_size == 1 && is_normal(m, s.representative) ? "yes" : "no") << hint(sub) << "\n";
    }
    out << cls.size() << " classes, " << total << " subgroups\n";
  } else {
    const auto subs = all_subgroups(m, c.caps.max_subgroup_order);
    std::map<std::size_t, std::size_t> by_order;
    for (const auto& s : subs) ++by_order[s.count()];
    out << std::left << std::setw(8) << "order" << "count\n";
    for (const auto& [o, n] : by_order) out << std::setw(8) << o << n << "\n";
    out << subs.size() << " subgroups\n";
  }
  return kPass;
}

int cmd_aut(const std::string& expr, const Common& c, std::ostream& out) {
  const GroupHandle h = build_checked(expr, c.caps);
  const MaterializedGroup& m = h.materialized(c.caps.max_order);
  const AutGroup a = automorphism_group(m, c.caps.max_aut_order, c.jobs);
  out << "group        " << h.name() << "\n"
      << "order        " << m.order() << "\n"
      << "|Aut|        " << a.order() << "\n"
      << "|Inn|        " << a.inner_order << "\n"
      << "|Out|        " << a.out_order << "\n";
  return kPass;
}

int cmd_claims(std::ostream& out) {
  for (const auto& c : builtin_claims())
    out << std::left << std::setw(16) << c.id << std::setw(24) << to_string(c.kind) << c.paper_ref << "\n";
  return kPass;
}

int cmd_verify(const std::vector<std::string>& ids, const std::optional<std::string>& json,
               std::optional<long> timeout, const Common& c, std::ostream& out, std::ostream& err) {
  const auto registry = builtin_claims();
  for (const auto& id : ids) {
    bool known = false;
    for (const auto& claim : registry) known = known || matches_filter(claim.id, {id});
    if (!known) {
      err << "error: no claim matches '" << id << "'\n";
      return kUsage;
    }
  }
  std::vector<ClaimRecord> selected;
  for (const auto& claim : registry)
    if (ids.empty() || matches_filter(claim.id, ids)) selected.push_back(claim);
  RunOptions opts;
  opts.jobs = c.jobs;
  opts.caps = c.caps;
  if (timeout) opts.timeout = std::chrono::seconds(*timeout);
  const auto results = run(selected, opts);
  out << report_text(results);
  if (json) write_report(*json, results);
  return summarize(results).fail == 0 ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-group engine and claim ledger.\n"
               "Cycle strings use 1-based points; products apply the right factor first."};
  app.require_subcommand(1);
  Common common;

  auto* verify = app.add_subcommand("verify", "Run the claim ledger");
  std::vector<std::string> ids;
  bool all = false;
  std::optional<std::string> json;
  std::optional<long> timeout;
  add_caps(verify, common);
  verify->add_option("--claim", ids, "Claim id or glob (repeatable)");
  verify->add_flag("--all", all, "Run every claim");
  verify->add_option("--json", json, "Write the JSON report to PATH");
  verify->add_option("--timeout", timeout, "Per-claim timeout in seconds")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Minimal index of a normal abelian p'-subgroup");
  std::string expr;
  std::uint64_t p = 0;
  analyze->add_option("expr", expr, "Group expression")->required();
  analyze->add_option("-p,--prime", p, "Prime")->required();
  add_caps(analyze, common);

  auto* subgroups = app.add_subcommand("subgroups", "Subgroup lattice summary");
  bool up_to = false;
  subgroups->add_option("expr", expr, "Group expression")->required();
  subgroups->add_flag("--up-to-conjugacy", up_to, "One line per conjugacy class");
  add_caps(subgroups, common);

  auto* aut = app.add_subcommand("aut", "Automorphism group orders");
  aut->add_option("expr", expr, "Group expression")->required();
  add_caps(aut, common);

  app.add_subcommand("claims", "List registered claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) {
      if (all && !ids.empty()) {
        err << "error: --all and --claim are exclusive\n";
        return kUsage;
      }
      return cmd_verify(ids, json, timeout, common, out, err);
    }
    if (*analyze) return cmd_analyze(expr, p, common, out);
    if (*subgroups) return cmd_subgroups(expr, up_to, common, out);
    if (*aut) return cmd_aut(expr, common, out);
    return cmd_claims(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace grpverify::cli

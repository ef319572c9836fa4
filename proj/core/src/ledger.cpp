#include "grpverify/ledger.hpp"

#include <fnmatch.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "grpverify/deadline.hpp"
#include "grpverify/error.hpp"
#include "grpverify/expr.hpp"
#include "grpverify/parallel.hpp"

namespace grpverify {

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::JSweep: return "j-sweep";
    case CheckKind::NormalList: return "normal-list";
    case CheckKind::Iso: return "iso";
    case CheckKind::AutOrder: return "aut-order";
    case CheckKind::Characteristic: return "characteristic";
    case CheckKind::Arithmetic: return "arithmetic-inequality";
    case CheckKind::CdIndex: return "cd-index";
  }
  return "unknown";
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skip: return "skip";
  }
  return "unknown";
}

namespace {

ClaimStatus parse_status(const std::string& s) {
  if (s == "pass") return ClaimStatus::Pass;
  if (s == "fail") return ClaimStatus::Fail;
  if (s == "skip") return ClaimStatus::Skip;
  throw std::runtime_error("unknown status '" + s + "'");
}

std::filesystem::path cache_path(const std::string& key) {
  const char* dir = std::getenv("GRPVERIFY_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::ostringstream name;
  name << "classes-" << std::hex << std::setw(16) << std::setfill('0')
       << std::hash<std::string>{}(key) << ".json";
  return std::filesystem::path(dir) / name.str();
}

std::optional<std::vector<SubgroupClass>> load_classes(const std::filesystem::path& path,
                                                       const std::string& key,
                                                       std::size_t universe) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.at("key").get<std::string>() != key) return std::nullopt;
    if (doc.at("universe").get<std::size_t>() != universe) return std::nullopt;
    std::vector<SubgroupClass> out;
    for (const auto& c : doc.at("classes")) {
      SubgroupClass sc;
      sc.representative =
          ElementSet::from_indices(universe, c.at("elements").get<std::vector<std::uint32_t>>());
      sc.order = c.at("order").get<std::size_t>();
      sc.class_size = c.at("class_size").get<std::size_t>();
      if (sc.representative.count() != sc.order) return std::nullopt;
      out.push_back(std::move(sc));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_classes(const std::filesystem::path& path, const std::string& key, std::size_t universe,
                   const std::vector<SubgroupClass>& classes) {
  nlohmann::json doc;
  doc["key"] = key;
  doc["universe"] = universe;
  doc["classes"] = nlohmann::json::array();
  for (const auto& c : classes) {
    doc["classes"].push_back(
        {{"order", c.order}, {"class_size", c.class_size}, {"elements", c.representative.indices()}});
  }
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

struct ClaimContext::Entry {
  std::optional<GroupHandle> handle;
  std::optional<std::vector<ElementSet>> normals;
  std::optional<std::vector<SubgroupClass>> classes;
  std::optional<AutGroup> aut;
};

ClaimContext::ClaimContext(Caps caps, std::size_t jobs) : caps_(caps), jobs_(jobs) {}
ClaimContext::~ClaimContext() = default;

void ClaimContext::record(std::string key, std::string value, std::string witness) {
  obs_.push_back({std::move(key), std::move(value), std::move(witness)});
}

void ClaimContext::record(std::string key, const Rational& value, std::string witness) {
  record(std::move(key), to_string(value), std::move(witness));
}

void ClaimContext::record(std::string key, std::uint64_t value, std::string witness) {
  record(std::move(key), std::to_string(value), std::move(witness));
}

void ClaimContext::record_bool(std::string key, bool value, std::string witness) {
  record(std::move(key), std::string(value ? "true" : "false"), std::move(witness));
}

ClaimContext::Entry& ClaimContext::entry(const std::string& expr) {
  auto& slot = entries_[expr];
  if (!slot) slot = std::make_unique<Entry>();
  return *slot;
}

const GroupHandle& ClaimContext::handle(const std::string& expr) {
  Entry& e = entry(expr);
  if (!e.handle) e.handle.emplace(build(expr, BuildOptions{caps_.max_order}));
  return *e.handle;
}

const MaterializedGroup& ClaimContext::group(const std::string& expr) {
  return handle(expr).materialized(caps_.max_order);
}

const std::vector<ElementSet>& ClaimContext::normals(const std::string& expr) {
  Entry& e = entry(expr);
  if (!e.normals) e.normals = normal_subgroups(group(expr));
  return *e.normals;
}

const std::vector<SubgroupClass>& ClaimContext::classes(const std::string& expr) {
  Entry& e = entry(expr);
  if (e.classes) return *e.classes;
  const MaterializedGroup& m = group(expr);
  const std::string key = to_string(parse_expr(expr)) + "|" + std::to_string(caps_.max_order) +
                          "|" + std::to_string(caps_.max_subgroup_order);
  const auto path = cache_path(key);
  if (!path.empty()) {
    if (auto hit = load_classes(path, key, m.order())) {
      e.classes = std::move(*hit);
      return *e.classes;
    }
  }
  e.classes = subgroups_up_to_conjugacy(m, caps_.max_subgroup_order);
  if (!path.empty()) store_classes(path, key, m.order(), *e.classes);
  return *e.classes;
}

const AutGroup& ClaimContext::aut(const std::string& expr) {
  Entry& e = entry(expr);
  if (!e.aut) e.aut = automorphism_group(group(expr), caps_.max_aut_order, jobs_);
  return *e.aut;
}

bool matches_filter(const std::string& id, const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  for (const auto& f : filters)
    if (fnmatch(f.c_str(), id.c_str(), 0) == 0) return true;
  return false;
}

namespace {

std::string join_expected(const std::vector<Expectation>& ex) {
  std::string out;
  for (const auto& e : ex) {
    if (!out.empty()) out += "; ";
    out += e.key + "=" + e.value;
  }
  return out;
}

const Observation* find_observation(const std::vector<Observation>& obs, const std::string& key) {
  const Observation* hit = nullptr;
  for (const auto& o : obs)
    if (o.key == key) hit = &o;
  return hit;
}

}  // namespace

ClaimResult evaluate(const ClaimRecord& claim, const std::vector<Observation>& observations) {
  ClaimResult r;
  r.id = claim.id;
  r.paper_ref = claim.paper_ref;
  r.expected = join_expected(claim.expected);
  std::string actual;
  std::string mismatches;
  std::string notes;
  for (const auto& e : claim.expected) {
    const Observation* o = find_observation(observations, e.key);
    if (!actual.empty()) actual += "; ";
    actual += e.key + "=" + (o ? o->value : std::string("<missing>"));
    if (!o || o->value != e.value) {
      if (!mismatches.empty()) mismatches += "; ";
      mismatches += e.key + ": expected " + e.value + ", got " + (o ? o->value : "<missing>");
      if (o && !o->witness.empty()) mismatches += " (" + o->witness + ")";
    } else if (!o->witness.empty()) {
      if (!notes.empty()) notes += "; ";
      notes += e.key + ": " + o->witness;
    }
  }
  r.actual = actual;
  if (!mismatches.empty()) {
    r.status = ClaimStatus::Fail;
    r.witness = mismatches;
  } else {
    r.status = ClaimStatus::Pass;
    if (!notes.empty()) r.witness = notes;
  }
  return r;
}

ClaimOutcome run_claim(const ClaimRecord& claim, const RunOptions& opts) {
  const auto start = Clock::now();
  ClaimOutcome out;
  ClaimContext ctx(opts.caps, opts.jobs);
  std::optional<std::string> skip;
  try {
    std::optional<DeadlineScope> scope;
    if (opts.timeout) scope.emplace(std::chrono::duration_cast<Clock::duration>(*opts.timeout));
    claim.check(ctx);
  } catch (const CapExceeded& e) {
    skip = std::string("cap: ") + e.what();
  } catch (const TimeoutError& e) {
    skip = std::string("timeout: ") + e.what();
  } catch (const SkipClaim& e) {
    skip = e.what();
  } catch (const std::exception& e) {
    // A check that crashes is a failure with the exception as its witness.
    out.observations = ctx.observations();
    out.result = evaluate(claim, out.observations);
    out.result.status = ClaimStatus::Fail;
    out.result.witness = std::string("internal error: ") + e.what();
  }
  if (skip) {
    out.observations = ctx.observations();
    out.result = evaluate(claim, out.observations);
    out.result.status = ClaimStatus::Skip;
    out.result.witness = "skipped: " + *skip;
  } else if (out.result.id.empty()) {
    out.observations = ctx.observations();
    out.result = evaluate(claim, out.observations);
  }
  out.result.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return out;
}

std::vector<ClaimOutcome> run_detailed(const std::vector<ClaimRecord>& claims,
                                       const RunOptions& opts) {
  std::vector<const ClaimRecord*> selected;
  for (const auto& c : claims)
    if (matches_filter(c.id, opts.filters)) selected.push_back(&c);
  std::vector<ClaimOutcome> out(selected.size());
  if (selected.size() <= 1 || opts.jobs <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) out[i] = run_claim(*selected[i], opts);
    return out;
  }
  RunOptions inner = opts;
  inner.jobs = 1;
  parallel_for(selected.size(), opts.jobs,
               [&](std::size_t i) { out[i] = run_claim(*selected[i], inner); });
  return out;
}

std::vector<ClaimResult> run(const std::vector<ClaimRecord>& claims, const RunOptions& opts) {
  std::vector<ClaimResult> out;
  for (auto& o : run_detailed(claims, opts)) out.push_back(std::move(o.result));
  return out;
}

Summary summarize(const std::vector<ClaimResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case ClaimStatus::Pass: ++s.pass; break;
      case ClaimStatus::Fail: ++s.fail; break;
      case ClaimStatus::Skip: ++s.skip; break;
    }
  }
  return s;
}

namespace {

std::string clip(const std::string& s, std::size_t width) {
  if (s.size() <= width) return s;
  return s.substr(0, width - 3) + "...";
}

}  // namespace

std::string report_text(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "id" << std::setw(8) << "status" << std::setw(48)
      << "expected" << std::setw(48) << "actual" << std::right << std::setw(8) << "ms" << "\n";
  for (const auto& r : results) {
    out << std::left << std::setw(16) << clip(r.id, 15) << std::setw(8) << to_string(r.status)
        << std::setw(48) << clip(r.expected, 47) << std::setw(48) << clip(r.actual, 47)
        << std::right << std::setw(8) << r.runtime_ms << "\n";
    if (r.status != ClaimStatus::Pass && r.witness) out << "    " << *r.witness << "\n";
  }
  const Summary s = summarize(results);
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skip << " skip\n";
  return out.str();
}

std::string report_json(const std::vector<ClaimResult>& results) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["claims"] = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json c;
    c["id"] = r.id;
    c["paper_ref"] = r.paper_ref;
    c["status"] = to_string(r.status);
    c["expected"] = r.expected;
    c["actual"] = r.actual;
    c["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    c["runtime_ms"] = r.runtime_ms;
    doc["claims"].push_back(std::move(c));
  }
  const Summary s = summarize(results);
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}};
  return doc.dump(2);
}

std::vector<ClaimResult> parse_report_json(const std::string& text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.at("version").get<int>() != 1) throw std::runtime_error("unsupported report version");
    std::vector<ClaimResult> out;
    for (const auto& c : doc.at("claims")) {
      ClaimResult r;
      r.id = c.at("id").get<std::string>();
      r.paper_ref = c.at("paper_ref").get<std::string>();
      r.status = parse_status(c.at("status").get<std::string>());
      r.expected = c.at("expected").get<std::string>();
      r.actual = c.at("actual").get<std::string>();
      if (!c.at("witness").is_null()) r.witness = c.at("witness").get<std::string>();
      r.runtime_ms = c.at("runtime_ms").get<std::int64_t>();
      out.push_back(std::move(r));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

void write_report(const std::string& path, const std::vector<ClaimResult>& results) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << report_json(results) << "\n";
  if (!out) throw std::runtime_error("cannot write report to " + path);
}

}  // namespace grpverify

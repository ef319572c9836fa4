#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grpverify/autmorph.hpp"
#include "grpverify/construct.hpp"
#include "grpverify/lattice.hpp"
#include "grpverify/numeric.hpp"

namespace grpverify {

enum class CheckKind { JSweep, NormalList, Iso, AutOrder, Characteristic, Arithmetic, CdIndex };
enum class ClaimStatus { Pass, Fail, Skip };

std::string to_string(CheckKind k);
std::string to_string(ClaimStatus s);

struct Caps {
  std::size_t max_order = MaterializedGroup::kDefaultCap;
  std::size_t max_subgroup_order = kDefaultSubgroupCap;
  std::size_t max_aut_order = 2500;

  friend bool operator==(const Caps&, const Caps&) = default;
};

struct Expectation {
  std::string key;
  std::string value;
};

struct Observation {
  std::string key;
  std::string value;
  std::string witness;
};

// Thrown by a check that cannot run; the claim is reported as skipped.
class SkipClaim : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-claim workspace: records observations and memoizes groups built from
// expressions, their normal subgroups, subgroup classes and automorphisms.
class ClaimContext {
 public:
  ClaimContext(Caps caps, std::size_t jobs);
  ~ClaimContext();
  ClaimContext(const ClaimContext&) = delete;
  ClaimContext& operator=(const ClaimContext&) = delete;

  const Caps& caps() const { return caps_; }
  std::size_t jobs() const { return jobs_; }

  void record(std::string key, std::string value, std::string witness = {});
  void record(std::string key, const Rational& value, std::string witness = {});
  void record(std::string key, std::uint64_t value, std::string witness = {});
  void record_bool(std::string key, bool value, std::string witness = {});
  const std::vector<Observation>& observations() const { return obs_; }

  const GroupHandle& handle(const std::string& expr);
  const MaterializedGroup& group(const std::string& expr);
  const std::vector<ElementSet>& normals(const std::string& expr);
  // Cached under GRPVERIFY_CACHE_DIR when that variable is set.
  const std::vector<SubgroupClass>& classes(const std::string& expr);
  const AutGroup& aut(const std::string& expr);

 private:
  struct Entry;
  Entry& entry(const std::string& expr);

  Caps caps_;
  std::size_t jobs_;
  std::vector<Observation> obs_;
  std::map<std::string, std::unique_ptr<Entry>> entries_;
};

using ClaimCheck = std::function<void(ClaimContext&)>;

struct ClaimRecord {
  std::string id;
  std::string paper_ref;  // "label: quote"
  CheckKind kind = CheckKind::Arithmetic;
  std::vector<std::string> groups;
  std::vector<std::uint64_t> primes;
  std::vector<std::pair<std::string, Rational>> constants;
  std::vector<Expectation> expected;
  std::string erratum;  // empty unless the printed statement needed correction
  ClaimCheck check;
};

struct ClaimResult {
  std::string id;
  std::string paper_ref;
  ClaimStatus status = ClaimStatus::Skip;
  std::string expected;
  std::string actual;
  std::optional<std::string> witness;
  std::int64_t runtime_ms = 0;

  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct RunOptions {
  std::vector<std::string> filters;  // glob patterns over ids; empty selects all
  std::size_t jobs = 1;
  std::optional<std::chrono::seconds> timeout;
  Caps caps;
};

std::vector<ClaimRecord> builtin_claims();

bool matches_filter(const std::string& id, const std::vector<std::string>& filters);

// Compares recorded observations against a claim's expectations.
ClaimResult evaluate(const ClaimRecord& claim, const std::vector<Observation>& observations);

struct ClaimOutcome {
  ClaimResult result;
  std::vector<Observation> observations;
};

ClaimOutcome run_claim(const ClaimRecord& claim, const RunOptions& opts);

// Results come back in registry order whatever the parallelism.
std::vector<ClaimResult> run(const std::vector<ClaimRecord>& claims, const RunOptions& opts);
std::vector<ClaimOutcome> run_detailed(const std::vector<ClaimRecord>& claims,
                                       const RunOptions& opts);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

Summary summarize(const std::vector<ClaimResult>& results);
std::string report_text(const std::vector<ClaimResult>& results);
std::string report_json(const std::vector<ClaimResult>& results);
// Throws std::runtime_error on malformed input.
std::vector<ClaimResult> parse_report_json(const std::string& text);
// Throws std::runtime_error if the path cannot be written.
void write_report(const std::string& path, const std::vector<ClaimResult>& results);

}  // namespace grpverify

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdsg/classifier.hpp"
#include "zdsg/formulas.hpp"
#include "zdsg/zd_graph.hpp"

namespace zdsg {

inline constexpr const char* kCodeVersion = "1.0.0";

enum class Method { formula, generator, oracle };

std::string to_string(Method m);

struct MethodSelection {
  bool formula = true;
  bool generator = true;
  bool oracle = true;

  static MethodSelection all() { return {}; }
  static MethodSelection only(Method m);
};

struct RunOptions {
  int jobs = 1;
  bool allow_long_run = false;
  /// Oracle catalogs are cached here when set.
  std::optional<std::string> cache_dir;
};

/// A disagreement worth reporting.
///
/// Findings compare a stated (closed-form or quoted) value against a computed
/// one and never fail a run. Mismatches are method-vs-method disagreements
/// that no stated condition explains; they make the run fail.
struct Discrepancy {
  enum class Kind { finding, mismatch };

  Kind kind = Kind::finding;
  std::string description;
  std::string stated_value;
  std::string computed_value;
  std::vector<MulTable> witnesses;
};

struct CountReport {
  TargetGraph target;
  std::map<Method, std::uint64_t> method_counts;
  /// K_n+1 only: per-case and per-r counts for each method that ran.
  std::map<Method, PendantCaseCount> strata;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;
  /// Catalogs behind the generator and oracle counts.
  std::optional<ClassCatalog> generator_catalog;
  std::optional<ClassCatalog> oracle_catalog;

  bool internally_consistent() const;
  std::size_t finding_count() const;
};

/// Thrown when the oracle is explicitly requested beyond its default budget.
class BudgetRefusal : public std::runtime_error {
 public:
  explicit BudgetRefusal(const std::string& what) : std::runtime_error(what) {}
};

/// Runs the selected pipelines and compares them.
///
/// Pipelines are:
///   formula:   the closed-form count (K_n) or the per-case stated counts (K_n+1);
///   generator: the constructive generators, every output re-validated;
///   oracle:    brute-force labeled enumeration plus classification.
/// When only `oracle` is selected past oracle_within_budget and
/// allow_long_run is false, throws BudgetRefusal. With several methods the
/// oracle is skipped and a note is recorded instead.
CountReport run_count(const TargetGraph& target, const MethodSelection& methods,
                      const RunOptions& options);

/// Human-readable report; byte-identical across runs.
std::string render_text(const CountReport& report);
nlohmann::json to_json(const CountReport& report);

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

enum class CheckStatus { pass, fail, finding, skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyReport {
  int lo = 0;
  int hi = 0;
  std::vector<CheckResult> checks;

  /// True iff no check failed; findings and skips do not count.
  bool ok() const;
};

/// Number of partitions of `total` into exactly `parts` parts by listing
/// them. Independent of partitions_exact.
std::uint64_t count_partitions_by_listing(int total, int parts);

/// Every cross-check whose budget fits n in [lo, hi].
VerifyReport run_verify(int lo, int hi, const RunOptions& options);

std::string render_text(const VerifyReport& report);

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

}  // namespace zdsg

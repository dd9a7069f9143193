#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace leoq {

enum class Expectation {
  Hold,           // the identity must hold on its whole grid
  FailAsPrinted,  // the identity is expected to fail; a corrected twin must hold
};

struct Counterexample {
  int p = 0;
  std::int64_t n = 0;
  std::string lhs;
  std::string rhs;
};

/// One registered identity. `scan` evaluates both sides exactly over the
/// (p, n) grid in lexicographic order and reports the first mismatch.
struct IdentitySpec {
  std::string id;
  std::string statement;
  Expectation expectation = Expectation::Hold;
  std::string corrected_id;  // set on FailAsPrinted entries: the repaired twin
  int p_cap = 0;             // 1 for order-1-only identities, 0 for "any p"
  std::function<std::int64_t(int)> n_lower;  // first valid index at order p (null for
                                             // entries that are not pointwise grids)
  std::string n_lower_label;                 // e.g. "0", "p+1", "2p+1"
  std::function<std::string(int p_max, std::int64_t n_max)> grid;
  std::function<std::optional<Counterexample>(int p_max, std::int64_t n_max)> scan;
};

struct VerificationReport {
  std::string id;
  Expectation expectation = Expectation::Hold;
  std::string grid;
  bool holds = false;
  std::optional<Counterexample> first_counterexample;
  double elapsed_seconds = 0.0;
};

/// A printed statement that fails exact evaluation, paired with the corrected
/// form that passes. The suite fails loudly unless the ledger holds exactly
/// the curated pairs.
struct DiscrepancyEntry {
  std::string printed_id;
  std::string corrected_id;
  Counterexample counterexample;
  bool corrected_holds = false;
};

struct VerificationSummary {
  int p_max = 0;
  std::int64_t n_max = 0;
  std::vector<VerificationReport> reports;
  std::vector<DiscrepancyEntry> discrepancy_ledger;
  bool success = false;
};

/// The full identity registry, in fixed (deterministic) order.
const std::vector<IdentitySpec>& registry();

/// Lookup by id; throws std::out_of_range for unknown ids.
const IdentitySpec& find_identity(const std::string& id);

VerificationReport run_identity(const IdentitySpec& spec, int p_max, std::int64_t n_max);

/// Runs the whole registry. Success means: every Hold entry holds, and every
/// FailAsPrinted entry fails with a counterexample while its corrected twin
/// holds. Requires p_max >= 1 and n_max >= 2 p_max + 2.
VerificationSummary run_all(int p_max, std::int64_t n_max);

/// Runs a subset by id (corrected twins of selected FailAsPrinted entries are
/// pulled in automatically so the success criterion stays meaningful).
VerificationSummary run_selected(const std::vector<std::string>& ids, int p_max,
                                 std::int64_t n_max);

}  // namespace leoq

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "treedom/exact_oracles.hpp"
#include "treedom/parent_array.hpp"
#include "treedom/steiner_domination.hpp"
#include "treedom/tree_corpus.hpp"

namespace treedom {

enum class OracleChoice { kAuto, kUnpruned, kPruned };

std::string_view to_string(OracleChoice choice);
OracleChoice parse_oracle_choice(std::string_view name);

/// Everything checked about one tree: validity of the constructed set, the
/// forest algorithm against both domination oracles, and the constructed
/// size against the exact Steiner domination number.
struct InstanceAudit {
  SteinerDominationResult solution;
  bool sd_contains_leaves = false;
  bool sd_is_steiner = false;
  bool sd_is_dominating = false;
  bool formula_route_agrees = false;  // formula_gamma_st == size (trivially true for n = 1)
  bool forest_optimal_on_h = false;
  bool forest_optimal_on_tree = false;
  ExactSolution oracle;
  bool oracle_pruned = false;

  bool valid() const {
    return sd_contains_leaves && sd_is_steiner && sd_is_dominating && formula_route_agrees;
  }
  bool forest_optimal() const { return forest_optimal_on_h && forest_optimal_on_tree; }
  bool discrepancy() const { return oracle.size < solution.size; }
  bool formula_below_oracle() const { return solution.size < oracle.size; }
};

/// Throws CapExceededError if the requested oracle cannot handle the size.
InstanceAudit audit_tree(const ParentArray& tree, OracleChoice oracle,
                         const OracleCaps& caps = {});

/// Evidence that the constructed set exceeds the exact optimum on an
/// instance.
struct DiscrepancyCertificate {
  ParentArray instance;
  std::size_t algorithm_size = 0;
  VertexSet algorithm_set;
  std::size_t oracle_size = 0;
  VertexSet oracle_witness;
  bool witness_is_steiner = false;
  bool witness_is_dominating = false;
};

/// Re-runs the witness checks. Throws Error if they fail or if
/// oracle_size >= algorithm_size.
DiscrepancyCertificate make_certificate(const ParentArray& instance,
                                        const InstanceAudit& audit);

/// Writes `<stem>.par` and `<stem>.json` into `dir`; returns the sidecar path.
std::filesystem::path write_certificate(const DiscrepancyCertificate& cert,
                                        const std::filesystem::path& dir,
                                        const std::string& stem);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Loads a sidecar and the .par it names, recomputes the algorithm's size
/// and (within caps) the exact optimum, and re-checks the witness.
CertificateCheck revalidate_certificate(const std::filesystem::path& sidecar,
                                        const OracleCaps& caps = {});

enum class VerifyMode { kExhaustive, kRandom };

std::string_view to_string(VerifyMode mode);
VerifyMode parse_verify_mode(std::string_view name);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kExhaustive;
  Vertex min_n = 0;  // 0: 1 for exhaustive, 2 for random
  Vertex max_n = 7;
  std::size_t count = 1000;  // random mode only
  std::uint64_t seed = 42;   // random mode only
  Family family = Family::kPrufer;  // random mode only
  OracleChoice oracle = OracleChoice::kAuto;
  OracleCaps caps;
  bool include_fixtures = true;
  std::filesystem::path report_path;      // empty: no report file
  std::filesystem::path certificate_dir;  // empty: no certificate files
};

struct PerSizeSummary {
  Vertex n = 0;
  std::size_t instances = 0;
  std::size_t discrepancies = 0;
  std::size_t max_gap = 0;
};

struct FixtureOutcome {
  std::string name;
  std::size_t algorithm_size = 0;
  std::size_t oracle_size = 0;
  bool certificate = false;
};

struct VerifySummary {
  std::size_t instances = 0;
  std::size_t validity_failures = 0;
  std::size_t forest_failures = 0;
  std::size_t formula_below_oracle = 0;
  std::size_t invalid_certificates = 0;
  std::size_t agreements = 0;
  std::size_t discrepancies = 0;
  std::size_t max_gap = 0;
  std::vector<PerSizeSummary> per_n;
  std::vector<FixtureOutcome> fixtures;
  std::vector<std::string> certificates;  // sidecar file names
  std::vector<std::string> failures;      // first few failure descriptions

  bool failed() const {
    return validity_failures + forest_failures + formula_below_oracle +
               invalid_certificates > 0;
  }
  /// 0 clean, 2 discrepancy certificates only, 1 any failure.
  int exit_code() const;
};

/// Audits every instance of the requested stream (plus the named fixtures),
/// writes certificates and the JSON report. Throws CapExceededError when the
/// options exceed the enumerator or oracle caps.
VerifySummary run_verify(const VerifyOptions& options);

/// Deterministic JSON rendering of a summary (no timestamps, no paths).
std::string verify_report_json(const VerifyOptions& options, const VerifySummary& summary);

}  // namespace treedom

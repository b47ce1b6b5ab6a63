#include "treedom/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <string>

#include "json.hpp"
#include "treedom/error.hpp"
#include "treedom/forest_domination.hpp"
#include "treedom/tree_model.hpp"

namespace treedom {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kMaxFailureNotes = 20;

ordered_json to_json(const VertexSet& s) {
  ordered_json out = ordered_json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

std::string describe(const ParentArray& p) {
  std::string out = "[";
  for (Vertex v = 1; v <= p.size(); ++v) {
    if (v > 1) out += ',';
    out += std::to_string(p.parent(v));
  }
  return out + "]";
}

bool use_pruned(Vertex n, OracleChoice choice, const OracleCaps& caps) {
  switch (choice) {
    case OracleChoice::kUnpruned: return false;
    case OracleChoice::kPruned: return true;
    case OracleChoice::kAuto: return n > caps.gamma_st_unpruned;
  }
  return false;
}

Vertex oracle_limit(OracleChoice choice, const OracleCaps& caps) {
  return choice == OracleChoice::kUnpruned ? caps.gamma_st_unpruned : caps.gamma_st_pruned;
}

std::string stem_for(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "cert-%07zu", index);
  return buf;
}

class Auditor {
 public:
  Auditor(const VerifyOptions& options, VerifySummary& summary)
      : options_(options), summary_(summary) {}

  // Returns the audit so fixtures can be reported individually.
  InstanceAudit process(const ParentArray& tree, const std::string& stem, bool count_it) {
    InstanceAudit audit = audit_tree(tree, options_.oracle, options_.caps);
    const Vertex n = tree.size();

    if (count_it) {
      ++summary_.instances;
      PerSizeSummary& row = per_n_[n];
      row.n = n;
      ++row.instances;
      if (audit.discrepancy()) {
        const std::size_t gap = audit.solution.size - audit.oracle.size;
        ++row.discrepancies;
        row.max_gap = std::max(row.max_gap, gap);
        summary_.max_gap = std::max(summary_.max_gap, gap);
        ++summary_.discrepancies;
      } else if (!audit.formula_below_oracle()) {
        ++summary_.agreements;
      }
    }

    if (!audit.valid()) {
      ++summary_.validity_failures;
      note("invalid Steiner dominating set on " + describe(tree));
    }
    if (!audit.forest_optimal()) {
      ++summary_.forest_failures;
      note("forest domination not optimal on " + describe(tree));
    }
    if (audit.formula_below_oracle()) {
      ++summary_.formula_below_oracle;
      note("constructed size below the exact optimum on " + describe(tree));
    }
    if (audit.discrepancy()) emit_certificate(tree, audit, stem);
    return audit;
  }

  void finish() {
    for (auto& [n, row] : per_n_) summary_.per_n.push_back(row);
  }

 private:
  void note(std::string message) {
    if (summary_.failures.size() < kMaxFailureNotes) summary_.failures.push_back(std::move(message));
  }

  void emit_certificate(const ParentArray& tree, const InstanceAudit& audit,
                        const std::string& stem) {
    DiscrepancyCertificate cert;
    try {
      cert = make_certificate(tree, audit);
    } catch (const Error& e) {
      ++summary_.invalid_certificates;
      note(e.what());
      return;
    }
    if (options_.certificate_dir.empty()) return;
    const auto sidecar = write_certificate(cert, options_.certificate_dir, stem);
    const CertificateCheck check = revalidate_certificate(sidecar, options_.caps);
    if (!check.ok) {
      ++summary_.invalid_certificates;
      note(sidecar.filename().string() + ": " + check.reason);
    }
    summary_.certificates.push_back(sidecar.filename().string());
  }

  const VerifyOptions& options_;
  VerifySummary& summary_;
  std::map<Vertex, PerSizeSummary> per_n_;
};

}  // namespace

std::string_view to_string(OracleChoice choice) {
  switch (choice) {
    case OracleChoice::kAuto: return "auto";
    case OracleChoice::kUnpruned: return "unpruned";
    case OracleChoice::kPruned: return "pruned";
  }
  return "?";
}

OracleChoice parse_oracle_choice(std::string_view name) {
  if (name == "auto") return OracleChoice::kAuto;
  if (name == "unpruned") return OracleChoice::kUnpruned;
  if (name == "pruned") return OracleChoice::kPruned;
  throw InvalidArgumentError("unknown oracle '" + std::string(name) + "'");
}

std::string_view to_string(VerifyMode mode) {
  return mode == VerifyMode::kExhaustive ? "exhaustive" : "random";
}

VerifyMode parse_verify_mode(std::string_view name) {
  if (name == "exhaustive") return VerifyMode::kExhaustive;
  if (name == "random") return VerifyMode::kRandom;
  throw InvalidArgumentError("unknown verify mode '" + std::string(name) + "'");
}

InstanceAudit audit_tree(const ParentArray& tree, OracleChoice oracle, const OracleCaps& caps) {
  InstanceAudit a;
  a.solution = steiner_domination(tree);
  const AdjacencyTree t = build_adjacency(tree);
  const SteinerDominationResult& r = a.solution;

  a.sd_contains_leaves = leaf_set(t).is_subset_of(r.sd);
  a.sd_is_steiner = is_steiner_set(t, r.sd);
  a.sd_is_dominating = is_dominating_set(t, r.sd);
  a.formula_route_agrees =
      tree.size() < 2 ? r.size == 1 : formula_gamma_st(t) == r.size && r.formula_value == r.size;

  const AdjacencyTree h = build_adjacency(r.h.nparent);
  const std::size_t gamma_h = r.d_h.size();
  a.forest_optimal_on_h = gamma_h == exact_gamma_dp(h) &&
                          is_dominating_set(h, forest_domination(r.h.nparent));
  if (h.size() <= caps.bruteforce_gamma) {
    a.forest_optimal_on_h = a.forest_optimal_on_h && exact_gamma_bruteforce(h, caps.bruteforce_gamma).size == gamma_h;
  }
  const VertexSet d_tree = forest_domination(tree);
  a.forest_optimal_on_tree = is_dominating_set(t, d_tree) && d_tree.size() == exact_gamma_dp(t);
  if (t.size() <= caps.bruteforce_gamma) {
    a.forest_optimal_on_tree = a.forest_optimal_on_tree && exact_gamma_bruteforce(t, caps.bruteforce_gamma).size == d_tree.size();
  }

  a.oracle_pruned = use_pruned(tree.size(), oracle, caps);
  a.oracle = exact_gamma_st(t, a.oracle_pruned, caps);
  return a;
}

DiscrepancyCertificate make_certificate(const ParentArray& instance, const InstanceAudit& audit) {
  DiscrepancyCertificate cert;
  cert.instance = instance;
  cert.algorithm_size = audit.solution.size;
  cert.algorithm_set = audit.solution.sd;
  cert.oracle_size = audit.oracle.size;
  cert.oracle_witness = audit.oracle.witness;
  const AdjacencyTree t = build_adjacency(instance);
  cert.witness_is_steiner = is_steiner_set(t, cert.oracle_witness);
  cert.witness_is_dominating = is_dominating_set(t, cert.oracle_witness);
  if (!cert.witness_is_steiner || !cert.witness_is_dominating) {
    throw Error("certificate witness fails its checks on " + describe(instance));
  }
  if (cert.oracle_witness.size() != cert.oracle_size || cert.oracle_size >= cert.algorithm_size) {
    throw Error("certificate does not show a strict discrepancy on " + describe(instance));
  }
  return cert;
}

std::filesystem::path write_certificate(const DiscrepancyCertificate& cert,
                                        const std::filesystem::path& dir,
                                        const std::string& stem) {
  std::filesystem::create_directories(dir);
  const std::string par_name = stem + ".par";
  write_text_file(dir / par_name, format_parent_file(cert.instance));

  ordered_json j;
  j["instance"] = par_name;
  j["n"] = cert.instance.size();
  j["parents"] = cert.instance.to_vector();
  j["algorithm_size"] = cert.algorithm_size;
  j["algorithm_set"] = to_json(cert.algorithm_set);
  j["oracle_size"] = cert.oracle_size;
  j["oracle_witness"] = to_json(cert.oracle_witness);
  j["checks"] = {{"witness_is_steiner", cert.witness_is_steiner},
                 {"witness_is_dominating", cert.witness_is_dominating}};
  const auto sidecar = dir / (stem + ".json");
  write_text_file(sidecar, j.dump(2) + "\n");
  return sidecar;
}

CertificateCheck revalidate_certificate(const std::filesystem::path& sidecar,
                                        const OracleCaps& caps) {
  auto fail = [](std::string reason) { return CertificateCheck{false, std::move(reason)}; };
  try {
    std::ifstream in(sidecar);
    if (!in) return fail("cannot open sidecar");
    const nlohmann::json j = nlohmann::json::parse(in);
    const ParentArray tree = read_parent_file(sidecar.parent_path() / j.at("instance").get<std::string>());
    const auto algorithm_size = j.at("algorithm_size").get<std::size_t>();
    const auto oracle_size = j.at("oracle_size").get<std::size_t>();
    const VertexSet witness(j.at("oracle_witness").get<std::vector<Vertex>>());

    if (oracle_size >= algorithm_size) return fail("oracle size is not below the algorithm size");
    if (witness.size() != oracle_size) return fail("witness size differs from oracle size");
    if (witness.max() > tree.size()) return fail("witness label outside the instance");

    const SteinerDominationResult r = steiner_domination(tree);
    if (r.size != algorithm_size) return fail("recomputed algorithm size differs");
    const AdjacencyTree t = build_adjacency(tree);
    if (!is_steiner_set(t, witness)) return fail("witness is not a Steiner set");
    if (!is_dominating_set(t, witness)) return fail("witness is not a dominating set");
    if (tree.size() <= std::max(caps.gamma_st_pruned, caps.gamma_st_unpruned)) {
      const bool prune = tree.size() > caps.gamma_st_unpruned;
      if (exact_gamma_st(t, prune, caps).size != oracle_size) return fail("recomputed optimum differs");
    }
    return {true, {}};
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int VerifySummary::exit_code() const {
  if (failed()) return 1;
  return discrepancies > 0 || !certificates.empty() ? 2 : 0;
}

VerifySummary run_verify(const VerifyOptions& options) {
  const Vertex min_n = options.min_n != 0 ? options.min_n
                                          : (options.mode == VerifyMode::kExhaustive ? 1 : 2);
  if (min_n > options.max_n) throw InvalidArgumentError("verify: min_n exceeds max_n");
  if (options.mode == VerifyMode::kExhaustive && options.max_n > kMaxEnumerationSize) {
    throw CapExceededError("verify: exhaustive mode supports max_n <= " +
                           std::to_string(kMaxEnumerationSize));
  }
  const Vertex limit = oracle_limit(options.oracle, options.caps);
  if (options.max_n > limit) {
    throw CapExceededError("verify: max_n = " + std::to_string(options.max_n) +
                           " exceeds the oracle cap of " + std::to_string(limit));
  }

  VerifySummary summary;
  Auditor auditor(options, summary);
  std::size_t index = 0;

  if (options.mode == VerifyMode::kExhaustive) {
    for (Vertex n = min_n; n <= options.max_n; ++n) {
      ParentArrayEnumerator stream(n, EnumerationMode::kTrees);
      while (auto tree = stream.next()) auditor.process(*tree, stem_for(++index), true);
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Vertex> draw_n(min_n, options.max_n);
    for (std::size_t k = 0; k < options.count; ++k) {
      GeneratorSpec spec;
      spec.family = options.family;
      spec.n = draw_n(rng);
      spec.seed = rng();
      auditor.process(gen(spec), stem_for(++index), true);
    }
  }

  if (options.include_fixtures) {
    for (const std::string& name : fixture_names()) {
      const ParentArray tree = named_fixture(name);
      const InstanceAudit audit = auditor.process(tree, "fixture-" + name, false);
      summary.fixtures.push_back(
          {name, audit.solution.size, audit.oracle.size, audit.discrepancy()});
    }
  }
  auditor.finish();

  if (!options.report_path.empty()) {
    if (options.report_path.has_parent_path()) {
      std::filesystem::create_directories(options.report_path.parent_path());
    }
    write_text_file(options.report_path, verify_report_json(options, summary));
  }
  return summary;
}

std::string verify_report_json(const VerifyOptions& options, const VerifySummary& summary) {
  ordered_json j;
  j["mode"] = to_string(options.mode);
  j["max_n"] = options.max_n;
  if (options.mode == VerifyMode::kRandom) {
    j["count"] = options.count;
    j["seed"] = options.seed;
    j["family"] = to_string(options.family);
  }
  j["oracle"] = to_string(options.oracle);
  j["instances"] = summary.instances;
  j["agreements"] = summary.agreements;
  j["discrepancies"] = summary.discrepancies;
  j["max_gap"] = summary.max_gap;
  j["validity_failures"] = summary.validity_failures;
  j["forest_domination_failures"] = summary.forest_failures;
  j["formula_below_oracle"] = summary.formula_below_oracle;
  j["invalid_certificates"] = summary.invalid_certificates;

  ordered_json per_n = ordered_json::array();
  for (const PerSizeSummary& row : summary.per_n) {
    per_n.push_back({{"n", row.n},
                     {"instances", row.instances},
                     {"discrepancies", row.discrepancies},
                     {"max_gap", row.max_gap}});
  }
  j["per_n"] = std::move(per_n);

  ordered_json fixtures = ordered_json::array();
  for (const FixtureOutcome& f : summary.fixtures) {
    fixtures.push_back({{"name", f.name},
                        {"algorithm_size", f.algorithm_size},
                        {"oracle_size", f.oracle_size},
                        {"outcome", f.certificate ? "certificate" : "clean"}});
  }
  j["fixtures"] = std::move(fixtures);
  j["certificates"] = summary.certificates;
  j["failures"] = summary.failures;
  j["exit_code"] = summary.exit_code();
  return j.dump(2) + "\n";
}

}  // namespace treedom

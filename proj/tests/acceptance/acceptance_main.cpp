// Acceptance gate. Runs each acceptance criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is 0 only if all pass.
//
// Usage: treedom_acceptance [criterion numbers...]   (default: all)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alloc_probe.hpp"
#include "treedom/bench.hpp"
#include "treedom/exact_oracles.hpp"
#include "treedom/forest_domination.hpp"
#include "treedom/steiner_domination.hpp"
#include "treedom/tree_corpus.hpp"
#include "treedom/tree_model.hpp"
#include "treedom/verify.hpp"

namespace {

using namespace treedom;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

ParentArray prufer_tree(std::mt19937_64& rng, Vertex lo, Vertex hi) {
  GeneratorSpec spec;
  spec.family = Family::kPrufer;
  spec.n = std::uniform_int_distribution<Vertex>(lo, hi)(rng);
  spec.seed = rng();
  return gen(spec);
}

std::string show(const ParentArray& p) {
  std::string s = "[";
  for (Vertex v = 1; v <= p.size(); ++v) s += (v > 1 ? "," : "") + std::to_string(p.parent(v));
  return s + "]";
}

// 1. Forest domination is optimal on every forest parent array with n <= 8.
void forest_exhaustive(Outcome& o) {
  std::size_t checked = 0;
  for (Vertex n = 1; n <= 8; ++n) {
    ParentArrayEnumerator stream(n, EnumerationMode::kForests);
    while (auto f = stream.next()) {
      const AdjacencyTree t = build_adjacency(*f);
      const VertexSet d = forest_domination(*f);
      const std::size_t brute = exact_gamma_bruteforce(t).size;
      const std::size_t dp = exact_gamma_dp(t);
      if (!is_dominating_set(t, d) || d.size() != brute || d.size() != dp) {
        o.fail(show(*f) + " |D|=" + std::to_string(d.size()) + " brute=" +
               std::to_string(brute) + " dp=" + std::to_string(dp));
      }
      ++checked;
    }
  }
  o.detail << checked << " forests, n <= 8";
}

// 2. Forest domination matches the DP on random Prüfer trees.
void forest_random(Outcome& o) {
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 10000; ++k) {
    const ParentArray p = prufer_tree(rng, 2, 60);
    const AdjacencyTree t = build_adjacency(p);
    const VertexSet d = forest_domination(p);
    if (!is_dominating_set(t, d) || d.size() != exact_gamma_dp(t)) o.fail(show(p));
  }
  o.detail << "10000 Prufer trees, n in [2, 60]";
}

// 3. Steiner domination output is valid and has size |L| + gamma(H).
void steiner_validity(Outcome& o) {
  std::mt19937_64 rng(20240602);
  for (int k = 0; k < 10000; ++k) {
    const ParentArray p = prufer_tree(rng, 2, 300);
    const AdjacencyTree t = build_adjacency(p);
    const SteinerDominationResult r = steiner_domination(p);
    const VertexSet leaves = leaf_set(t);
    const std::size_t gamma_h = exact_gamma_dp(build_adjacency(r.h.nparent));
    if (!leaves.is_subset_of(r.sd) || !is_steiner_set(t, r.sd) || !is_dominating_set(t, r.sd) ||
        r.size != leaves.size() + gamma_h || r.sd.size() != r.size) {
      o.fail(show(p));
    }
  }
  o.detail << "10000 Prufer trees, n in [2, 300]";
}

// 4. Audit of the closed-form value against the exact Steiner domination
// number. Discrepancies are findings; only invalid certificates or a formula
// below the oracle fail the criterion.
void formula_audit(Outcome& o) {
  const std::filesystem::path root =
      std::filesystem::temp_directory_path() / "treedom-acceptance-audit";
  std::filesystem::remove_all(root);

  struct Run {
    const char* label;
    VerifyOptions options;
  };
  std::vector<Run> runs(3);
  runs[0].label = "exhaustive n<=9";
  runs[0].options.mode = VerifyMode::kExhaustive;
  runs[0].options.max_n = 9;
  runs[1].label = "random n<=16 unpruned";
  runs[1].options.mode = VerifyMode::kRandom;
  runs[1].options.max_n = 16;
  runs[1].options.count = 2000;
  runs[1].options.seed = 16;
  runs[1].options.oracle = OracleChoice::kUnpruned;
  runs[1].options.include_fixtures = false;
  runs[2].label = "random n<=24 pruned";
  runs[2].options.mode = VerifyMode::kRandom;
  runs[2].options.max_n = 24;
  runs[2].options.count = 2000;
  runs[2].options.seed = 24;
  runs[2].options.oracle = OracleChoice::kPruned;
  runs[2].options.include_fixtures = false;

  for (std::size_t i = 0; i < runs.size(); ++i) {
    VerifyOptions& options = runs[i].options;
    options.report_path = root / ("run" + std::to_string(i) + ".json");
    options.certificate_dir = root / ("run" + std::to_string(i) + ".certificates");
    const VerifySummary s = run_verify(options);
    if (s.failed()) {
      o.fail(std::string(runs[i].label) + ": " +
             (s.failures.empty() ? std::string("summary flagged") : s.failures.front()));
    }
    std::size_t revalidated = 0;
    for (const std::string& name : s.certificates) {
      const CertificateCheck check = revalidate_certificate(options.certificate_dir / name);
      if (!check.ok) o.fail(name + ": " + check.reason);
      ++revalidated;
    }
    std::size_t fixture_certificates = 0;
    for (const FixtureOutcome& f : s.fixtures) fixture_certificates += f.certificate ? 1 : 0;
    if (s.certificates.size() != s.discrepancies + fixture_certificates) {
      o.fail(std::string(runs[i].label) + ": certificate count mismatch");
    }
    o.detail << runs[i].label << ": " << s.instances << " trees, " << s.discrepancies
             << " discrepancies (max gap " << s.max_gap << "), " << revalidated
             << " certificates revalidated; ";
    if (i == 0) {
      if (s.fixtures.size() != 1 || s.fixtures[0].name != "theorem1-audit-8") {
        o.fail("fixture theorem1-audit-8 not recorded");
      } else {
        o.detail << "fixture theorem1-audit-8: " << s.fixtures[0].algorithm_size << " vs oracle "
                 << s.fixtures[0].oracle_size << " -> "
                 << (s.fixtures[0].certificate ? "certificate" : "clean") << "; ";
      }
    }
  }
  std::filesystem::remove_all(root);
}

// 5. The Steiner number of a tree is its leaf count, and minimum Steiner sets
// contain every leaf.
void steiner_number(Outcome& o) {
  std::size_t checked = 0;
  auto check = [&](const ParentArray& p, bool with_sets) {
    const AdjacencyTree t = build_adjacency(p);
    const VertexSet leaves = leaf_set(t);
    if (exact_steiner_number(t) != leaves.size()) o.fail("s(T) != |L| on " + show(p));
    if (with_sets) {
      for (const VertexSet& w : minimum_steiner_sets(t)) {
        if (!leaves.is_subset_of(w)) o.fail("minimum Steiner set misses a leaf on " + show(p));
      }
    }
    ++checked;
  };
  for (Vertex n = 1; n <= 9; ++n) {
    ParentArrayEnumerator stream(n, EnumerationMode::kTrees);
    while (auto p = stream.next()) check(*p, true);
  }
  std::mt19937_64 rng(20240605);
  for (int k = 0; k < 500; ++k) {
    const ParentArray p = prufer_tree(rng, 1, 14);
    check(p, p.size() <= 12);
  }
  o.detail << checked << " trees (all n <= 9 plus 500 random n <= 14)";
}

// 6. Per-vertex time and peak heap grow linearly across decades.
void linearity(Outcome& o) {
  BenchOptions options;
  options.sizes = {10000, 100000, 1000000};
  options.repetitions = 5;
  options.probe = alloc_probe::make_memory_probe();
  const std::vector<BenchRecord> records = run_bench(options);
  for (const LinearityCheck& c : check_linearity(records, 3.0, 12.0)) {
    char line[160];
    std::snprintf(line, sizeof line, "%s %u->%u time x%.2f mem x%.2f; ", c.algorithm.c_str(),
                  c.from_n, c.to_n, c.time_ratio, c.memory_ratio);
    o.detail << line;
    if (!c.ok) o.fail(line);
  }
}

// 7. Closed-form values on stars and paths.
void known_families(Outcome& o) {
  for (Vertex n = 3; n <= 40; ++n) {
    GeneratorSpec spec;
    spec.family = Family::kStar;
    spec.n = n;
    const ParentArray p = gen(spec);
    const SteinerDominationResult r = steiner_domination(p);
    if (r.size != n - 1 || r.formula_value != n - 1) o.fail("star n=" + std::to_string(n));
    if (n <= 18 && exact_gamma_st(build_adjacency(p), false).size != n - 1) {
      o.fail("star oracle n=" + std::to_string(n));
    }
  }
  for (Vertex n = 2; n <= 12; ++n) {
    GeneratorSpec spec;
    spec.family = Family::kPath;
    spec.n = n;
    const ParentArray p = gen(spec);
    const std::size_t expected = n <= 4 ? 2 : 2 + (n - 4 + 2) / 3;
    const SteinerDominationResult r = steiner_domination(p);
    const std::size_t oracle = exact_gamma_st(build_adjacency(p), false).size;
    if (r.size != expected || r.formula_value != expected || oracle != expected) {
      o.fail("P" + std::to_string(n) + ": size " + std::to_string(r.size) + ", oracle " +
             std::to_string(oracle) + ", expected " + std::to_string(expected));
    }
  }
  o.detail << "stars n in [3, 40], paths P2..P12";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "forest domination optimal, all forests n <= 8", forest_exhaustive},
      {2, "forest domination optimal, 10k random trees", forest_random},
      {3, "Steiner domination validity and size", steiner_validity},
      {4, "closed-form audit with self-validating certificates", formula_audit},
      {5, "Steiner number equals leaf count", steiner_number},
      {6, "linear time and memory scaling", linearity},
      {7, "stars and paths", known_families},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s) [%.1fs]: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                seconds, o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

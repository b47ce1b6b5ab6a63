// treedom: minimum domination of rooted forests and Steiner domination of
// trees, with an exact-oracle audit harness and a linearity benchmark.
//
// Exit codes: 0 success, 1 usage/input/internal error, 2 verify wrote
// discrepancy certificates.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alloc_probe.hpp"
#include "treedom/bench.hpp"
#include "treedom/error.hpp"
#include "treedom/forest_domination.hpp"
#include "treedom/solve.hpp"
#include "treedom/steiner_domination.hpp"
#include "treedom/tree_corpus.hpp"
#include "treedom/tree_model.hpp"
#include "treedom/verify.hpp"

namespace {

using namespace treedom;

struct SolveArgs {
  std::string input;
  std::string format = "auto";
  bool json = false;
};

struct ForestArgs {
  std::string input;
  bool json = false;
};

struct GenArgs {
  std::string family = "prufer";
  std::string fixture;
  Vertex n = 0;
  std::uint64_t seed = 0;
  Vertex legs = 0;
  Vertex leglen = 0;
  Vertex spine = 0;
  std::vector<Vertex> pattern{1};
  bool edges = false;
  std::string out;
};

struct VerifyArgs {
  std::string mode = "exhaustive";
  Vertex min_n = 0;
  Vertex max_n = 7;
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  std::string family = "prufer";
  std::string oracle = "auto";
  std::string report = "verify-report.json";
  std::string cert_dir;
  bool no_fixtures = false;
};

struct BenchArgs {
  std::vector<Vertex> sizes{10000, 100000, 1000000};
  unsigned reps = 5;
  std::uint64_t seed = 7;
  std::string out;
  bool check = false;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

int run_solve(const SolveArgs& a) {
  const LoadedTree tree = load_tree(a.input, parse_input_format(a.format));
  const SteinerDominationResult r = steiner_domination(tree.parents);
  if (a.json) {
    std::cout << solve_report_json(tree, r) << '\n';
  } else {
    std::cout << solve_report_text(tree, r);
  }
  return 0;
}

int run_gamma_forest(const ForestArgs& a) {
  const ParentArray forest = read_parent_file(a.input);
  const VertexSet d = forest_domination(forest);
  if (a.json) {
    std::cout << forest_report_json(forest, d) << '\n';
  } else {
    std::cout << forest_report_text(forest, d);
  }
  return 0;
}

int run_gen(const GenArgs& a) {
  ParentArray tree;
  if (!a.fixture.empty()) {
    tree = named_fixture(a.fixture);
  } else {
    GeneratorSpec spec;
    spec.family = parse_family(a.family);
    spec.n = a.n;
    spec.seed = a.seed;
    spec.leg_count = a.legs;
    spec.leg_length = a.leglen;
    spec.spine_length = a.spine;
    spec.leg_pattern = a.pattern;
    tree = gen(spec);
  }
  emit(a.edges ? format_edge_list(edge_list_of(tree)) : format_parent_file(tree), a.out);
  return 0;
}

int run_verify_cmd(const VerifyArgs& a) {
  VerifyOptions options;
  options.mode = parse_verify_mode(a.mode);
  options.min_n = a.min_n;
  options.max_n = a.max_n;
  options.count = a.count;
  options.seed = a.seed;
  options.family = parse_family(a.family);
  options.oracle = parse_oracle_choice(a.oracle);
  options.include_fixtures = !a.no_fixtures;
  options.report_path = a.report;
  if (!a.cert_dir.empty()) {
    options.certificate_dir = a.cert_dir;
  } else {
    std::filesystem::path report(a.report);
    options.certificate_dir = report.parent_path() / (report.stem().string() + ".certificates");
  }

  const VerifySummary s = run_verify(options);
  std::cout << "instances: " << s.instances << "\n"
            << "agreements: " << s.agreements << "\n"
            << "discrepancies: " << s.discrepancies << " (max gap " << s.max_gap << ")\n"
            << "validity failures: " << s.validity_failures << "\n"
            << "forest domination failures: " << s.forest_failures << "\n"
            << "formula below oracle: " << s.formula_below_oracle << "\n"
            << "invalid certificates: " << s.invalid_certificates << "\n";
  for (const FixtureOutcome& f : s.fixtures) {
    std::cout << "fixture " << f.name << ": algorithm " << f.algorithm_size << ", oracle "
              << f.oracle_size << " -> " << (f.certificate ? "certificate" : "clean") << "\n";
  }
  for (const std::string& failure : s.failures) std::cerr << "failure: " << failure << "\n";
  std::cout << "report: " << a.report << "\n";
  if (!s.certificates.empty()) {
    std::cout << "certificates: " << s.certificates.size() << " in "
              << options.certificate_dir.string() << "\n";
  }
  return s.exit_code();
}

int run_bench_cmd(const BenchArgs& a) {
  BenchOptions options;
  options.sizes = a.sizes;
  options.repetitions = a.reps;
  options.seed = a.seed;
  options.probe = alloc_probe::make_memory_probe();
  const std::vector<BenchRecord> records = run_bench(options);
  emit(format_bench_csv(records), a.out);
  if (!a.check) return 0;

  bool ok = true;
  for (const LinearityCheck& c : check_linearity(records)) {
    std::fprintf(stderr, "%s %u -> %u: time ratio %.2f, memory ratio %.2f: %s\n",
                 c.algorithm.c_str(), c.from_n, c.to_n, c.time_ratio, c.memory_ratio,
                 c.ok ? "ok" : "FAIL");
    ok = ok && c.ok;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-time domination and Steiner domination of trees"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum Steiner dominating set construction for a tree");
  solve_cmd->add_option("input", solve.input, ".par or .edg file")->required();
  solve_cmd->add_option("--format", solve.format, "auto, par or edg")->capture_default_str();
  solve_cmd->add_flag("--json", solve.json, "Emit one JSON object");

  ForestArgs forest;
  auto* forest_cmd = app.add_subcommand("gamma-forest", "Minimum dominating set of a rooted forest");
  forest_cmd->add_option("input", forest.input, ".par file (several roots allowed)")->required();
  forest_cmd->add_flag("--json", forest.json, "Emit one JSON object");

  GenArgs g;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a tree as a .par (or .edg) file");
  gen_cmd->add_option("--family", g.family,
                      "prufer, random_parent, path, star, spider, caterpillar, binary")
      ->capture_default_str();
  gen_cmd->add_option("--fixture", g.fixture, "Named fixture, e.g. theorem1-audit-8");
  gen_cmd->add_option("--n", g.n, "Vertex count");
  gen_cmd->add_option("--seed", g.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--legs", g.legs, "Spider leg count");
  gen_cmd->add_option("--leglen", g.leglen, "Spider leg length");
  gen_cmd->add_option("--spine", g.spine, "Caterpillar spine length");
  gen_cmd->add_option("--pattern", g.pattern, "Caterpillar pendants per spine vertex, cycled")
      ->delimiter(',');
  gen_cmd->add_flag("--edges", g.edges, "Write an edge list instead of a parent array");
  gen_cmd->add_option("--out", g.out, "Output path (default: stdout)");

  VerifyArgs v;
  auto* verify_cmd = app.add_subcommand("verify", "Audit the construction against exact oracles");
  verify_cmd->add_option("--mode", v.mode, "exhaustive or random")->capture_default_str();
  verify_cmd->add_option("--min-n", v.min_n, "Smallest instance size");
  verify_cmd->add_option("--max-n", v.max_n, "Largest instance size")->capture_default_str();
  verify_cmd->add_option("--count", v.count, "Random instances")->capture_default_str();
  verify_cmd->add_option("--seed", v.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--family", v.family, "Random generator family")->capture_default_str();
  verify_cmd->add_option("--oracle", v.oracle, "auto, unpruned or pruned")->capture_default_str();
  verify_cmd->add_option("--report", v.report, "JSON report path")->capture_default_str();
  verify_cmd->add_option("--cert-dir", v.cert_dir,
                         "Certificate directory (default: <report stem>.certificates)");
  verify_cmd->add_flag("--no-fixtures", v.no_fixtures, "Skip the named fixtures");

  BenchArgs b;
  auto* bench_cmd = app.add_subcommand("bench", "Time both algorithms on Prüfer trees");
  bench_cmd->add_option("--sizes", b.sizes, "Ascending vertex counts")->delimiter(',');
  bench_cmd->add_option("--reps", b.reps, "Repetitions per size (>= 3)")->capture_default_str();
  bench_cmd->add_option("--seed", b.seed, "Generator seed")->capture_default_str();
  bench_cmd->add_option("--out", b.out, "CSV path (default: stdout)");
  bench_cmd->add_flag("--check", b.check, "Fail unless per-vertex time and memory scale linearly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve);
    if (forest_cmd->parsed()) return run_gamma_forest(forest);
    if (gen_cmd->parsed()) return run_gen(g);
    if (verify_cmd->parsed()) return run_verify_cmd(v);
    if (bench_cmd->parsed()) return run_bench_cmd(b);
  } catch (const std::exception& e) {
    std::cerr << "treedom: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
